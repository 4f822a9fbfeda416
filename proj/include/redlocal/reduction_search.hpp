#pragma once

#include "redlocal/fiber_cone.hpp"
#include "redlocal/groebner.hpp"
#include "redlocal/truncated_local.hpp"

#include <optional>
#include <string>
#include <vector>

namespace redlocal {

enum class FamilyProvenance { Vandermonde, F2Canonical, UserSupplied };
std::string to_string(FamilyProvenance p);

struct FormFamily {
  std::vector<LinearForm> forms;
  FamilyProvenance provenance = FamilyProvenance::UserSupplied;
  bool independent = false;
  std::vector<std::string> notes;

  std::size_t size() const { return forms.size(); }
};

// 1-based, strictly increasing indices into a FormFamily.
using IndexTuple = std::vector<std::size_t>;
std::string to_string(const IndexTuple &t);
// All n-subsets of {1..l}, lexicographic.
std::vector<IndexTuple> index_tuples(std::size_t l, std::size_t n);

// d (m - n) + n.
unsigned ell(unsigned d, unsigned m, unsigned n);

// Forms X_1 + a X_2 + ... + a^{m-1} X_m for a = 0, 1, ..., l-1.
// Throws FieldTooSmall over F_p with p < l.
FormFamily vandermonde_family(FieldCtx field, std::size_t m, std::size_t l);
// X_1, ..., X_m, X_1 + ... + X_m over F_2; for m = 1 the duplicate is
// dropped and a note is attached.
FormFamily f2_family(std::size_t m);
// Wraps user forms; independence is computed, not assumed.
FormFamily user_family(std::vector<LinearForm> forms, std::size_t m);

// Every m-subset has nonzero determinant; with fewer than m forms, full
// rank.
bool check_independent(const std::vector<LinearForm> &forms, std::size_t m);

// Q + (forms) is (X)-primary.
bool claim_holds(const HomogIdeal &q, const std::vector<LinearForm> &forms);

// Keeps J = Q; at step t picks the first unused form with
// dim k[X]/(J + form) <= n - t. nullopt on failure.
std::optional<IndexTuple> greedy_select(const HomogIdeal &q, const FormFamily &f,
                                        std::size_t n);
// All n-tuples passing claim_holds, lexicographic.
std::vector<IndexTuple> exhaustive_search(const HomogIdeal &q, const FormFamily &f,
                                          std::size_t n);

enum class SearchStrategy { GreedyThenExhaustive, ExhaustiveOnly };

struct SearchOptions {
  unsigned d_max = 0;  // 0: default_dmax(q)
  unsigned k_max = 8;
  unsigned e_cap = 64;
  SearchStrategy strategy = SearchStrategy::GreedyThenExhaustive;
  VarSetPtr fiber_vars;  // null: X1..Xm
};

struct ReductionCertificate {
  IndexTuple indices;
  std::vector<LinearForm> forms;
  std::vector<Poly> b_gens;
  unsigned reduction_k = 0;
  bool sop = false;
  bool claim_passed = false;
  std::optional<std::int64_t> e_q;
  std::optional<std::int64_t> e_b;
};

struct CandidateAttempt {
  IndexTuple indices;
  std::string outcome;
};

struct SearchResult {
  std::optional<ReductionCertificate> certificate;
  FiberPresentation presentation;
  bool greedy_succeeded = false;
  std::vector<CandidateAttempt> tried;
  std::vector<std::string> notes;
};

// Never throws SearchFailed itself: an empty certificate carries the
// diagnostics. Throws NotPrimary when q is not m-primary within e_cap and
// InvalidInput for a dependent or too small family.
SearchResult find_reduction(const LocalIdeal &q, const FormFamily &f,
                            const SearchOptions &opts = {});

// Family sized from the presentation: d = deg.rad(Q') when Q' is monomial,
// else deg k[X]/Q' (noted); Vandermonde over the field of q, F_2 family
// when p = 2 is large enough.
FormFamily auto_family(const FiberPresentation &fp, std::size_t n,
                       std::vector<std::string> *notes = nullptr);

std::vector<Poly> apply_forms(const std::vector<LinearForm> &forms,
                              const LocalIdeal &q);

struct CrosscheckResult {
  bool claim = false;
  // Verified reduction number, or nullopt for NotUpTo(k_max).
  std::optional<unsigned> direct;
  bool sop = false;
};
CrosscheckResult claim_crosscheck(const LocalIdeal &q, const HomogIdeal &big_q,
                                  const std::vector<LinearForm> &forms,
                                  unsigned k_max = 8, unsigned e_cap = 64);

// Re-derives b, sop and the minimal reduction number from the forms of a
// stored certificate; empty when everything matches, else the first
// discrepancy.
std::optional<std::string> verify_certificate(const LocalIdeal &q,
                                              const ReductionCertificate &c,
                                              unsigned k_max = 8,
                                              unsigned e_cap = 64);

} // namespace redlocal
