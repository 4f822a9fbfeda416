#include "redlocal/degree_radical.hpp"
#include "redlocal/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace redlocal;

namespace {

FieldCtx Q = FieldCtx::rationals();

VarSetPtr xyz() { return make_varset({"X", "Y", "Z"}, VarRole::FiberVars); }
VarSetPtr xyuv() { return make_varset({"X", "Y", "U", "V"}, VarRole::FiberVars); }

HomogIdeal homog(const VarSetPtr &v, std::vector<std::string> gens) {
  std::vector<Poly> p;
  for (const auto &g : gens)
    p.push_back(parse_poly(g, v, Q));
  return HomogIdeal(v, Q, p);
}

std::vector<std::string> names(const std::vector<CoordinatePrime> &ps, const VarSet &v) {
  std::vector<std::string> out;
  for (const auto &p : ps)
    out.push_back(p.to_string(v));
  return out;
}

const MonomialIdeal kXZ(3, {Monomial{1, 0, 1}});
const MonomialIdeal kFour(4, {Monomial{1, 0, 2, 0}, Monomial{0, 2, 0, 1}, Monomial{1, 0, 0, 1}});

} // namespace

TEST_CASE("minimal primes examples") {
  CHECK(names(monomial_minimal_primes(kXZ), *xyz()) == std::vector<std::string>{"(X)", "(Z)"});
  CHECK(names(monomial_minimal_primes(kFour), *xyuv()) ==
        std::vector<std::string>{"(X, Y)", "(X, V)", "(U, V)"});
  MonomialIdeal x1(3, {Monomial{1, 0, 0}});
  CHECK(monomial_minimal_primes(x1).size() == 1);
  CHECK(monomial_minimal_primes(MonomialIdeal(3)).front().vars.empty());
}

TEST_CASE("degrad examples") {
  CHECK(degrad(kXZ, *xyz()).total == 2);
  DegRadReport four = degrad(kFour, *xyuv());
  CHECK(four.total == 3);
  CHECK(four.source == DegRadSource::MonomialExact);
  CHECK(degrad(MonomialIdeal(3), *xyz()).total == 1);
}

TEST_CASE("degrad of a presentation requires monomials") {
  auto v = make_varset({"A", "B", "C", "D"}, VarRole::FiberVars);
  LocalIdeal q(testgen::xy(), Q,
               {parse_poly("x^3", testgen::xy(), Q), parse_poly("x^2*y", testgen::xy(), Q),
                parse_poly("x*y^2", testgen::xy(), Q), parse_poly("y^3", testgen::xy(), Q)});
  FiberPresentation fp = fiber_presentation(q, default_dmax(q), v);
  CHECK_THROWS_AS(degrad(fp), NotMonomial);
  DegRadReport r = degrad_from_decomposition(fp.ideal(), {fp.ideal()});
  CHECK(r.total == 3);
  CHECK(r.source == DegRadSource::UserDecomposition);
}

TEST_CASE("decomposition checks") {
  auto v = xyz();
  HomogIdeal q = homog(v, {"X*Z"});
  CHECK(degrad_from_decomposition(q, {homog(v, {"X"}), homog(v, {"Z"})}).total == 2);
  DegRadReport partial = degrad_from_decomposition(q, {homog(v, {"X"})});
  CHECK(partial.total == 1);
  CHECK(partial.source == DegRadSource::UserDecomposition);
  CHECK_THROWS_AS(degrad_from_decomposition(q, {homog(v, {"Y"})}), ContainmentFailure);
  CHECK_THROWS_AS(degrad_from_decomposition(q, {homog(v, {"X", "Y"})}), DimensionMismatch);
}

TEST_CASE("monotonicity examples") {
  MonotonicityResult y = monotonicity_check(kXZ, 1);
  CHECK(y.before == 2);
  CHECK(y.after == 2);
  MonotonicityResult x = monotonicity_check(kXZ, 0);
  CHECK(x.before == 2);
  CHECK(x.after == 1);
  MonotonicityResult f = monotonicity_check(kFour, 0);
  CHECK(f.before == 3);
  CHECK(f.after == 2);
  CHECK(f.holds());
}

TEST_CASE("prime union examples") {
  CHECK(monomial_prime_union_check(kXZ, Monomial{0, 1, 0}));
  CHECK(monomial_prime_union_check(kXZ, Monomial{1, 0, 0}));
  CHECK(monomial_prime_union_check(MonomialIdeal(3, {Monomial{1, 0, 0}}), Monomial{1, 0, 0}));
}

TEST_CASE("minimal primes agree with exhaustive search") {
  testgen::Rng rng(707);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(1, 5));
    MonomialIdeal mi = testgen::random_monomial_ideal(rng, m, 4, 2);
    auto got = monomial_minimal_primes(mi);
    std::vector<std::vector<std::size_t>> got_sets;
    for (const auto &p : got)
      got_sets.push_back(p.vars);
    CHECK(got_sets == oracle::minimal_primes(mi));
    std::vector<std::string> vn;
    for (std::size_t i = 0; i < m; ++i)
      vn.push_back("X" + std::to_string(i + 1));
    DegRadReport r = degrad(mi, VarSet{vn, VarRole::FiberVars});
    CHECK(r.total == static_cast<std::int64_t>(r.primes.size()));
    CHECK(r.total == static_cast<std::int64_t>(got.size()));
  }
}

TEST_CASE("monotonicity and prime union on random ideals") {
  testgen::Rng rng(708);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(2, 5));
    MonomialIdeal mi = testgen::random_monomial_ideal(rng, m, 4, 2);
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(m) - 1));
    MonotonicityResult r = monotonicity_check(mi, j);
    CHECK(r.holds());
    // Independent count: minimal covers of the generators X_j does not divide.
    std::vector<Monomial> rest;
    for (const auto &g : mi.min_gens())
      if (g[j] == 0)
        rest.push_back(g);
    CHECK(r.after == static_cast<std::int64_t>(
                         oracle::minimal_primes(MonomialIdeal(m, rest)).size()));
    CHECK(monomial_prime_union_check(mi, testgen::random_monomial(rng, m)));
  }
}
