#include "redlocal/errors.hpp"
#include "redlocal/truncated_local.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace redlocal;

namespace {

FieldCtx Q = FieldCtx::rationals();

LocalIdeal ideal(std::vector<std::string> gens) {
  auto v = testgen::xy();
  std::vector<Poly> p;
  for (const auto &g : gens)
    p.push_back(parse_poly(g, v, Q));
  return LocalIdeal(v, Q, p);
}

Poly P(const std::string &s) { return parse_poly(s, testgen::xy(), Q); }

} // namespace

TEST_CASE("monomial indexer") {
  MonomialIndexer idx(3);
  CHECK(idx.count(2) == 6);
  CHECK(idx.below(3) == 10);
  for (std::uint64_t c = 0; c < idx.below(6); ++c)
    CHECK(idx.rank(idx.unrank(c)) == c);
  CHECK(idx.unrank(1) == Monomial{1, 0, 0});
  CHECK(binomial(60, 30) == 118264581564861424ULL);
}

TEST_CASE("local ideals reject units") {
  CHECK_THROWS_AS(ideal({"1 + x"}), InvalidInput);
  CHECK(ideal({"0", "x"}).gens().size() == 1);
}

TEST_CASE("ideal_image examples") {
  TruncatedSubspace s = ideal_image(ideal({"x", "y"}), 2);
  CHECK(s.dim() == 2);
  TruncatedSubspace t = ideal_image(ideal({"x^2", "x*y", "y^3"}), 4);
  CHECK(t.dim() == 6);
  for (const char *std_mono : {"1", "x", "y", "y^2"})
    CHECK_FALSE(t.contains(P(std_mono)));
  CHECK(t.contains(P("x^3 + x*y^2")));
  LocalIdeal zero(testgen::xy(), Q, {});
  CHECK(ideal_image(zero, 5).dim() == 0);
}

TEST_CASE("contains_m_power examples") {
  LocalIdeal q = ideal({"x^2", "x*y", "y^3"});
  CHECK(contains_m_power(q, 4));
  CHECK(contains_m_power(q, 3));
  CHECK_FALSE(contains_m_power(q, 2));
  CHECK(contains_m_power(ideal({"x", "y"}), 1));
  for (unsigned e : {1u, 3u, 8u})
    CHECK_FALSE(contains_m_power(ideal({"x^2"}), e));
}

TEST_CASE("primary_witness examples") {
  // m^3 is already inside (x^2, xy, y^3), so E* = 3.
  auto w = primary_witness(ideal({"x^2", "x*y", "y^3"}));
  REQUIRE(w);
  CHECK(w->e_star == 3);
  CHECK(w->colength == 4);
  auto m = primary_witness(ideal({"x", "y"}));
  REQUIRE(m);
  CHECK(m->e_star == 1);
  CHECK(m->colength == 1);
  auto b = primary_witness(ideal({"x*y", "x^2 + x*y + y^3"}));
  REQUIRE(b);
  CHECK(b->e_star <= 5);
  CHECK(b->colength == 5);
  CHECK_FALSE(primary_witness(ideal({"x^2", "x*y"}), 16));
  CHECK_FALSE(primary_witness(ideal({"x^2"}), 16));
}

TEST_CASE("ideal_member examples") {
  LocalIdeal q = ideal({"x^2", "x*y", "y^3"});
  CHECK(ideal_member(P("x^3"), q));
  CHECK_FALSE(ideal_member(P("y^2"), q));
  CHECK(ideal_member(P("y^2 + y^3") * P("x + y"), q));
  CHECK_FALSE(ideal_member(P("y^2 + x^5"), q));
  CHECK(ideal_member(P("y^3 - x*y^2 + x^7"), q));
  CHECK_THROWS_AS(ideal_member(P("x"), ideal({"x^2"}), 16), NotPrimary);
}

TEST_CASE("products and powers") {
  LocalIdeal m = ideal({"x", "y"});
  LocalIdeal m2 = ideal_product(m, m);
  CHECK(m2.gens().size() == 3);
  LocalIdeal q = ideal({"x^2", "x*y", "y^3"});
  LocalIdeal q2 = ideal_power(q, 2);
  std::vector<std::string> got;
  for (const auto &g : q2.gens())
    got.push_back(g.to_string());
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"x*y^4", "x^2*y^2", "x^2*y^3", "x^3*y", "x^4", "y^6"});
  CHECK(ideal_power(q, 0).is_unit());
  LocalIdeal unit = LocalIdeal::unit(testgen::xy(), Q);
  CHECK(ideal_product(q, unit).gens().size() == q.gens().size());
}

TEST_CASE("reduction_number examples") {
  LocalIdeal q = ideal({"x^2", "x*y", "y^3"});
  auto k = reduction_number(q, ideal({"x*y", "x^2 + x*y + y^3"}));
  REQUIRE(k);
  CHECK(*k >= 1);
  CHECK(*k <= 4);
  CHECK(reduction_number(ideal({"x", "y"}), ideal({"x", "y"})) == 0u);
  CHECK_FALSE(reduction_number(q, ideal({"x^2", "y^3"})));
  CHECK_THROWS_AS(reduction_number(q, ideal({"x", "y^3"})), NotContained);
  CHECK_THROWS_AS(reduction_number(q, ideal({"x^2", "x*y"}), {8, 16}), NotPrimary);
}

TEST_CASE("staircase colengths on random monomial ideals") {
  testgen::Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    auto monos = testgen::random_primary_monomials(rng, 7, 5, 3);
    LocalIdeal q = testgen::local_monomial_ideal(monos);
    auto w = primary_witness(q);
    REQUIRE(w);
    CHECK(w->colength == oracle::staircase_colength(monos));
    // E* is the least E with every degree-E monomial in q.
    unsigned least = 0;
    for (unsigned e = 1; least == 0; ++e) {
      bool all = true;
      for (unsigned i = 0; i <= e; ++i) {
        Monomial m{i, e - i};
        bool in = false;
        for (const auto &g : monos)
          in = in || g.divides(m);
        all = all && in;
      }
      if (all)
        least = e;
    }
    CHECK(w->e_star == least);
  }
}

TEST_CASE("truncation properties on random ideals") {
  testgen::Rng rng(42);
  auto v = testgen::xy();
  for (int t = 0; t < 40; ++t) {
    auto monos = testgen::random_primary_monomials(rng, 5, 4);
    LocalIdeal mono = testgen::local_monomial_ideal(monos);
    // Perturb generators with higher-order terms to leave the monomial path.
    std::vector<Poly> gens;
    for (const auto &g : mono.gens())
      gens.push_back(g + Poly::monomial(v, g.terms().front().mono * Monomial{1, 0},
                                        Q.from_int(rng.uniform(-2, 2))));
    LocalIdeal q(v, Q, gens);
    auto w = primary_witness(q);
    REQUIRE(w);
    // Same leading staircase, so the same colength.
    CHECK(w->colength == oracle::staircase_colength(monos));
    for (unsigned i = 0; i <= w->e_star; ++i)
      CHECK(ideal_member(Poly::monomial(v, Monomial{i, w->e_star - i}, Q.one()), q));
    for (unsigned extra : {1u, 2u}) {
      TruncatedSubspace big = ideal_image(q, w->e_star + extra);
      CHECK(big.standard_count(w->e_star) == w->colength);
      CHECK(big.codim() == w->colength);
    }
    unsigned e = w->e_star + 2;
    TruncatedSubspace hi = ideal_image(q, e + 2), lo = ideal_image(q, e);
    CHECK(hi.dim() - lo.dim() == MonomialIndexer(2).below(e + 2) - MonomialIndexer(2).below(e));
    CHECK(reduction_number(q, q) == 0u);
  }
}

TEST_CASE("reduction numbers re-verified by subspace identity") {
  LocalIdeal q = ideal({"x^2", "x*y", "y^3"});
  LocalIdeal b = ideal({"x*y", "x^2 + x*y + y^3"});
  auto k = reduction_number(q, b);
  REQUIRE(k);
  LocalIdeal lhs = ideal_power(q, *k + 1);
  LocalIdeal rhs = ideal_product(b, ideal_power(q, *k));
  auto w = primary_witness(rhs);
  REQUIRE(w);
  CHECK(ideal_image(lhs, w->e_star).same_span(ideal_image(rhs, w->e_star)));
  CHECK(ideal_image(lhs, w->e_star + 3).same_span(ideal_image(rhs, w->e_star + 3)));
}
