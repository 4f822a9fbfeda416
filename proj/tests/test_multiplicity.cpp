#include "redlocal/errors.hpp"
#include "redlocal/multiplicity.hpp"
#include "support/generators.hpp"

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

// Twice the area below the lower convex hull of the exponent points
// (monotone chain, then trapezoids).
std::int64_t hull_oracle(const std::vector<Monomial> &monos) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (const auto &m : monos)
    pts.push_back({m[0], m[1]});
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> hull;
  for (auto p : pts) {
    while (hull.size() >= 2) {
      auto [x1, y1] = hull[hull.size() - 2];
      auto [x2, y2] = hull.back();
      if ((x2 - x1) * (p.second - y1) - (y2 - y1) * (p.first - x1) <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  // Region bounded by the axes and the hull from (0, b) to (a, 0).
  std::int64_t twice = 0;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i)
    twice += (hull[i + 1].first - hull[i].first) * (hull[i].second + hull[i + 1].second);
  return twice;
}

} // namespace

TEST_CASE("multiplicity examples") {
  CHECK(hs_multiplicity_auto(ideal({"x", "y"})).e == 1);
  CHECK(hs_multiplicity_auto(ideal({"x^2", "x*y", "y^3"})).e == 5);
  CHECK(hs_multiplicity_auto(ideal({"x^2", "y^3"})).e == 6);
  CHECK(hs_multiplicity_auto(ideal({"x^2", "x*y", "y^5"})).e == 7);
  CHECK(hs_multiplicity_auto(ideal({"x*y", "x^2 + x*y + y^3"})).e == 5);
  CHECK(hs_multiplicity_auto(ideal({"x^2", "x*y"}), 0, 16, 12).infinite());
  CHECK(newton_multiplicity(ideal({"x^2", "x*y", "y^3"})) == 5);
  CHECK(newton_multiplicity(ideal({"x^3", "y^4"})) == 12);
}

TEST_CASE("multiplicity input errors") {
  CHECK_THROWS_AS(hs_multiplicity(ideal({"x", "y"}), 3), InvalidInput);
  CHECK_THROWS_AS(newton_multiplicity(ideal({"x^2 + y^3", "x*y"})), NotMonomial);
  CHECK_THROWS_AS(newton_multiplicity(ideal({"x^2", "x*y"})), NotPrimary);
}

TEST_CASE("colength samples are increasing") {
  MultiplicityResult r = hs_multiplicity(ideal({"x^2", "x*y", "y^3"}), 6);
  REQUIRE(r.samples.size() == 6);
  CHECK(r.samples[0].colength == 4);
  for (std::size_t i = 1; i < r.samples.size(); ++i)
    CHECK(r.samples[i].colength > r.samples[i - 1].colength);
}

TEST_CASE("newton and hilbert-samuel agree on random monomial ideals") {
  testgen::Rng rng(1717);
  for (int t = 0; t < 25; ++t) {
    auto monos = testgen::random_primary_monomials(rng, 5, 4);
    LocalIdeal q = testgen::local_monomial_ideal(monos);
    std::int64_t newton = newton_multiplicity(q);
    CHECK(newton == hull_oracle(monos));
    MultiplicityResult hs = hs_multiplicity_auto(q);
    REQUIRE(hs.e);
    CHECK(*hs.e == newton);
    // More samples give the same value.
    MultiplicityResult more = hs_multiplicity_auto(q, 6);
    CHECK(more.e == hs.e);
  }
}

TEST_CASE("smaller ideals have larger multiplicity") {
  testgen::Rng rng(1718);
  for (int t = 0; t < 15; ++t) {
    auto monos = testgen::random_primary_monomials(rng, 4, 4);
    LocalIdeal q = testgen::local_monomial_ideal(monos);
    LocalIdeal b = ideal_product(ideal({"x", "y"}), q);
    CHECK(*hs_multiplicity_auto(b).e >= newton_multiplicity(q));
  }
}

TEST_CASE("minimum multiplicity over the (XZ) family") {
  for (auto [a, b] : {std::pair{2, 3}, std::pair{2, 5}}) {
    LocalIdeal q = ideal({"x^" + std::to_string(a), "x*y", "y^" + std::to_string(b)});
    std::vector<LinearForm> rows;
    for (auto c : {std::vector<int>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}) {
      std::vector<FieldElem> e;
      for (int v : c)
        e.push_back(Q.from_int(v));
      rows.emplace_back(e);
    }
    MinMultiplicityResult r = min_multiplicity_search(q, user_family(rows, 3));
    CHECK(r.e_q == a + b);
    REQUIRE(r.table.size() == 6);
    REQUIRE(r.argmin.size() == 1);
    CHECK(to_string(r.argmin.front()) == "(2,4)");
    CHECK(r.rees_flag.front());
    REQUIRE(r.argmin_k.front());
    CHECK(r.min_matches == true);
    for (const auto &row : r.table) {
      if (to_string(row.tuple) == "(2,4)")
        CHECK(row.e_b == a + b);
      else if (row.e_b)
        CHECK(*row.e_b == a * b);
    }
  }
}

TEST_CASE("fiber degree is bounded by the multiplicity") {
  for (auto gens : std::vector<std::vector<std::string>>{
           {"x^2", "x*y", "y^3"}, {"x^3", "x^2*y", "x*y^2", "y^3"}, {"x", "y"}}) {
    DegreeCheck c = degree_vs_multiplicity_check(ideal(gens));
    CHECK(c.stabilized);
    CHECK(c.ok);
    CHECK(c.deg_f <= c.e_q);
  }
}
