#pragma once

#include "redlocal/fiber_cone.hpp"
#include "redlocal/groebner.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace redlocal {

// Prime generated by a set of fiber variables (sorted indices). The empty
// set is the zero ideal.
struct CoordinatePrime {
  std::vector<std::size_t> vars;
  std::string to_string(const VarSet &names) const;
  bool operator==(const CoordinatePrime &) const = default;
};

// Minimal primes of a nonzero monomial ideal: the minimal vertex covers of
// the supports of its generators, sorted lexicographically by index list.
// The zero ideal gives the single prime (0).
std::vector<CoordinatePrime> monomial_minimal_primes(const MonomialIdeal &m);

enum class DegRadSource { MonomialExact, UserDecomposition };
std::string to_string(DegRadSource s);

struct PrimeDegree {
  std::string prime;
  std::int64_t degree = 1;
};

struct DegRadReport {
  std::vector<PrimeDegree> primes;
  std::int64_t total = 0;
  DegRadSource source = DegRadSource::MonomialExact;
};

// Sum of degrees of the minimal primes; for monomial ideals every minimal
// prime is a coordinate prime of degree 1.
DegRadReport degrad(const MonomialIdeal &m, const VarSet &names);
// Requires all generators of the presentation to be monomials; throws
// NotMonomial otherwise.
DegRadReport degrad(const FiberPresentation &fp);
// Trusted decomposition: each listed prime must contain Q (else
// ContainmentFailure) and the smallest prime dimension must equal dim Q
// (else DimensionMismatch). Degrees come from Hilbert series.
DegRadReport degrad_from_decomposition(const HomogIdeal &q,
                                       const std::vector<HomogIdeal> &primes);

// deg.rad(Q) against deg.rad(Q + (X_j)) computed with X_j eliminated.
struct MonotonicityResult {
  std::int64_t before = 0;
  std::int64_t after = 0;
  bool holds() const { return after <= before; }
};
MonotonicityResult monotonicity_check(const MonomialIdeal &q, std::size_t j);

// Minimal primes of I + (a) coincide with the minimal elements of the
// union over minimal primes P of I of the minimal primes of P + (a).
bool monomial_prime_union_check(const MonomialIdeal &i, const Monomial &a);

} // namespace redlocal
