#pragma once

#include "redlocal/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace redlocal {

// Ideal of the fiber polynomial ring generated by homogeneous polynomials.
class HomogIdeal {
public:
  // Throws NotHomogeneous on inhomogeneous input; zero generators are
  // dropped.
  HomogIdeal(VarSetPtr vars, FieldCtx field, std::vector<Poly> gens);

  const VarSetPtr &vars() const { return vars_; }
  const FieldCtx &field() const { return field_; }
  const std::vector<Poly> &gens() const { return gens_; }
  std::size_t nvars() const { return vars_->size(); }

  HomogIdeal plus(const std::vector<Poly> &more) const;
  std::string to_string() const;

private:
  VarSetPtr vars_;
  FieldCtx field_;
  std::vector<Poly> gens_;
};

// Monomial ideal kept as its antichain of minimal generators, sorted
// decreasingly in GrevLex.
class MonomialIdeal {
public:
  explicit MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens = {});

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial> &min_gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial &m) const;

  MonomialIdeal plus(const Monomial &m) const;
  // (I : m).
  MonomialIdeal colon(const Monomial &m) const;

  bool operator==(const MonomialIdeal &) const = default;
  std::string to_string(const VarSet &vars) const;

private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

struct GroebnerBasis {
  VarSetPtr vars;
  FieldCtx field;
  MonomialOrder order = MonomialOrder::GrevLex;
  // Reduced: monic, leading monomials pairwise non-divisible, sorted by
  // decreasing leading monomial.
  std::vector<Poly> basis;
};

GroebnerBasis buchberger(const HomogIdeal &ideal,
                         MonomialOrder order = MonomialOrder::GrevLex);

// Remainder of f on division by the basis (full reduction).
Poly normal_form(const Poly &f, const GroebnerBasis &gb);

MonomialIdeal leading_ideal(const GroebnerBasis &gb);

// Numerator h(t) of the Hilbert series h(t)/(1-t)^m of k[X]/M, with the
// dimension and degree read off after cancelling factors (1-t).
struct HilbertData {
  std::vector<std::int64_t> numerator;  // coefficient of t^i at index i
  int dimension = 0;                    // -1 for the unit ideal
  std::int64_t degree = 0;
};

HilbertData hilbert_series_monomial(const MonomialIdeal &m, std::size_t nvars);

// Largest variable set containing no generator's support.
int krull_dimension(const MonomialIdeal &m);
int krull_dimension(const HomogIdeal &ideal,
                    MonomialOrder order = MonomialOrder::GrevLex);
bool is_zero_dimensional(const HomogIdeal &ideal);
// Equal reduced GrevLex bases.
bool same_ideal(const HomogIdeal &a, const HomogIdeal &b);
std::int64_t quotient_degree(const HomogIdeal &ideal);

} // namespace redlocal
