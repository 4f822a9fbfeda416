#pragma once

#include "redlocal/linalg.hpp"
#include "redlocal/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace redlocal {

// Numbers the monomials of a fixed variable count by (degree ascending,
// then exponent vector lex-descending), so that the monomials of degree
// < E are exactly the columns 0 .. below(E)-1.
class MonomialIndexer {
public:
  explicit MonomialIndexer(std::size_t nvars) : n_(nvars) {}

  std::size_t nvars() const { return n_; }
  // Number of monomials of total degree d.
  std::uint64_t count(unsigned d) const;
  // Number of monomials of total degree < d.
  std::uint64_t below(unsigned d) const;
  std::uint64_t rank(const Monomial &m) const;
  Monomial unrank(std::uint64_t col) const;

private:
  std::size_t n_;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// An ideal of k[[x_1..x_n]] given by polynomial generators, all in m.
// The unit flag marks the unit ideal, used as q^0.
class LocalIdeal {
public:
  LocalIdeal(VarSetPtr vars, FieldCtx field, std::vector<Poly> gens);
  static LocalIdeal unit(VarSetPtr vars, FieldCtx field);

  const VarSetPtr &vars() const { return vars_; }
  const FieldCtx &field() const { return field_; }
  const std::vector<Poly> &gens() const { return gens_; }
  bool is_unit() const { return unit_; }
  bool is_monomial() const;
  // Largest total degree of a generator (0 if none).
  unsigned max_degree() const;

  std::string to_string() const;

private:
  LocalIdeal() = default;
  VarSetPtr vars_;
  FieldCtx field_;
  std::vector<Poly> gens_;
  bool unit_ = false;
};

// Image of an ideal in R/m^E as an echelonized subspace of the span of
// monomials of degree < E.
class TruncatedSubspace {
public:
  TruncatedSubspace(unsigned order, std::size_t nvars, FieldCtx field)
      : order_(order), index_(nvars), echelon_(field) {}

  unsigned order() const { return order_; }
  const MonomialIndexer &indexer() const { return index_; }
  std::size_t dim() const { return echelon_.rank(); }
  std::uint64_t ambient_dim() const { return index_.below(order_); }
  std::uint64_t codim() const { return ambient_dim() - dim(); }

  // Membership of f mod m^E.
  bool contains(const Poly &f) const;
  // True iff every monomial of degree d < E is a pivot column, i.e. the
  // degree-d part of R/m^E lies in the image.
  bool covers_degree(unsigned d) const;
  // Number of non-pivot columns of degree < d.
  std::uint64_t standard_count(unsigned d) const;
  bool is_pivot(const Monomial &m) const;

  const linalg::Echelon &echelon() const { return echelon_; }
  linalg::Echelon &echelon() { return echelon_; }
  std::vector<Poly> basis_polys(const VarSetPtr &vars) const;
  linalg::SparseRow to_row(const Poly &f) const;

  // Equal as subspaces (compares reduced echelon forms).
  bool same_span(const TruncatedSubspace &o) const;

private:
  unsigned order_;
  MonomialIndexer index_;
  linalg::Echelon echelon_;
};

// Span of {x^a g : g in gens, |a| + ord(g) < E} mod m^E, reduced echelon.
TruncatedSubspace ideal_image(const LocalIdeal &ideal, unsigned order);

// m^E ⊆ I, decided by checking that every degree-E monomial lies in
// ideal_image(I, E+1) (sufficient by Nakayama).
bool contains_m_power(const LocalIdeal &ideal, unsigned order);

struct PrimaryWitness {
  unsigned e_star = 0;         // smallest E with m^E ⊆ I
  std::uint64_t colength = 0;  // dim_k R/I
};

struct TruncationPolicy {
  unsigned e_cap = 64;
  // An order already known to satisfy m^E ⊆ I, or 0. A known order
  // replaces e_cap as the escalation limit.
  unsigned known_order = 0;
};

// Echelonized image of an m-primary ideal at an order past its witness;
// answers membership for arbitrary polynomials.
class LocalIdealOracle {
public:
  // nullopt when no m^E ⊆ I was found with E <= policy.e_cap.
  static std::optional<LocalIdealOracle> build(const LocalIdeal &ideal,
                                               const TruncationPolicy &policy = {});

  const PrimaryWitness &witness() const { return witness_; }
  bool member(const Poly &f) const;
  const TruncatedSubspace &subspace() const { return space_; }

private:
  LocalIdealOracle(TruncatedSubspace space, PrimaryWitness w)
      : space_(std::move(space)), witness_(w) {}
  TruncatedSubspace space_;
  PrimaryWitness witness_;
};

// nullopt is the inconclusive NotPrimaryUpTo(e_max) outcome.
std::optional<PrimaryWitness> primary_witness(const LocalIdeal &ideal,
                                              unsigned e_max = 64);

// Throws NotPrimary if the ideal has no witness within e_cap.
bool ideal_member(const Poly &f, const LocalIdeal &ideal, unsigned e_cap = 64);

LocalIdeal ideal_product(const LocalIdeal &a, const LocalIdeal &b);
LocalIdeal ideal_power(const LocalIdeal &a, unsigned k);

struct ReductionOptions {
  unsigned k_max = 8;
  unsigned e_cap = 64;
};

// Smallest k <= k_max with q^{k+1} = b q^k; nullopt is NoneUpTo(k_max).
// Throws NotPrimary when q or b has no witness within e_cap, NotContained
// when b is not inside q.
std::optional<unsigned> reduction_number(const LocalIdeal &q,
                                         const LocalIdeal &b,
                                         const ReductionOptions &opts = {});

} // namespace redlocal
