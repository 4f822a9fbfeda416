#pragma once

#include "redlocal/groebner.hpp"
#include "redlocal/truncated_local.hpp"

#include <vector>

namespace redlocal {

// Fiber variables X1..Xm.
VarSetPtr default_fiber_vars(std::size_t m);

// Generators of the null-form ideal Q found by scanning degrees 1..d_max.
// The generated ideal Q' is contained in the true Q; it equals Q only if
// all generators of Q have degree <= d_max, which is not certified.
struct FiberPresentation {
  VarSetPtr fiber_vars;
  FieldCtx field;
  // New generators per degree; index k holds degree-k generators.
  std::vector<std::vector<Poly>> gens_by_degree;
  unsigned d_max = 0;
  // No new generators at degrees d_max-1 and d_max.
  bool stabilized = false;
  // dim k[X]/Q'.
  int dim_check = 0;

  std::vector<Poly> gens() const;
  HomogIdeal ideal() const;
  bool all_monomial() const;
  bool degree_bound_too_small() const { return !stabilized; }
};

// Basis (reduced echelon, leading terms GrevLex-largest) of the degree-k
// forms P with P(u) in m q^k. Throws NotPrimary if q has no witness within
// e_cap.
std::vector<Poly> nullforms_at_degree(const LocalIdeal &q, unsigned k,
                                      const VarSetPtr &fiber_vars,
                                      unsigned e_cap = 64);

// 2 * (max generator degree) + 2.
unsigned default_dmax(const LocalIdeal &q);

FiberPresentation fiber_presentation(const LocalIdeal &q, unsigned d_max,
                                     const VarSetPtr &fiber_vars,
                                     unsigned e_cap = 64);

} // namespace redlocal
