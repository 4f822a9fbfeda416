#pragma once

#include "redlocal/reduction_search.hpp"
#include "redlocal/truncated_local.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace redlocal {

struct ColengthSample {
  unsigned s = 0;
  std::uint64_t colength = 0;
};

struct MultiplicityResult {
  // nullopt is the Infinity marker (ideal not m-primary).
  std::optional<std::int64_t> e;
  std::vector<ColengthSample> samples;
  // n-th forward differences of the colength sequence.
  std::vector<std::int64_t> differences;

  bool infinite() const { return !e.has_value(); }
};

// Colengths of I^s for s = 1..s_max; e is the n-th forward difference once
// it is constant over the last three values (two when only two exist).
// Throws EscalateSamples when it is not, InvalidInput when s_max < n + 2.
MultiplicityResult hs_multiplicity(const LocalIdeal &ideal, unsigned s_max,
                                   unsigned e_cap = 64);

// Retries hs_multiplicity with s_max + 2 until it stabilizes or passes
// s_limit.
MultiplicityResult hs_multiplicity_auto(const LocalIdeal &ideal, unsigned s_max = 0,
                                        unsigned s_limit = 16, unsigned e_cap = 64);

// Twice the area cut from the positive quadrant by the Newton polygon of a
// monomial ideal in two variables.
std::int64_t newton_multiplicity(const LocalIdeal &ideal);

struct MultiplicityRow {
  IndexTuple tuple;
  std::optional<std::int64_t> e_b;
};

struct MinMultiplicityResult {
  std::int64_t e_q = 0;
  std::vector<MultiplicityRow> table;
  std::vector<IndexTuple> argmin;
  // Per argmin entry: e(b) = e(q), so b is a reduction (the power series
  // ring is formally equidimensional).
  std::vector<bool> rees_flag;
  // Direct reduction number of each flagged argmin entry.
  std::vector<std::optional<unsigned>> argmin_k;
  // Minimum of the table equals e(q); nullopt when find_reduction found no
  // certificate to compare against.
  std::optional<bool> min_matches;
};

struct MultiplicityOptions {
  unsigned s_max = 0;  // 0: n + 4
  unsigned k_max = 8;
  unsigned e_cap = 64;
  unsigned d_max = 0;
  VarSetPtr fiber_vars;
};

MinMultiplicityResult min_multiplicity_search(const LocalIdeal &q, const FormFamily &f,
                                              const MultiplicityOptions &opts = {});

struct DegreeCheck {
  std::int64_t deg_f = 0;
  std::int64_t e_q = 0;
  bool stabilized = false;
  bool ok = false;
};

// deg k[X]/Q' <= e(q).
DegreeCheck degree_vs_multiplicity_check(const LocalIdeal &q,
                                         const MultiplicityOptions &opts = {});

} // namespace redlocal
