#include "redlocal/errors.hpp"
#include "redlocal/reduction_search.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace redlocal;

namespace {

FieldCtx Q = FieldCtx::rationals();

LocalIdeal ideal(std::vector<std::string> gens, FieldCtx f = Q) {
  auto v = testgen::xy();
  std::vector<Poly> p;
  for (const auto &g : gens)
    p.push_back(parse_poly(g, v, f));
  return LocalIdeal(v, f, p);
}

LinearForm form(FieldCtx f, std::vector<int> c) {
  std::vector<FieldElem> e;
  for (int v : c)
    e.push_back(f.from_int(v));
  return LinearForm(e);
}

VarSetPtr xyz() { return make_varset({"X", "Y", "Z"}, VarRole::FiberVars); }

HomogIdeal xz() { return HomogIdeal(xyz(), Q, {parse_poly("X*Z", xyz(), Q)}); }

// X, Y, Z, X + Y + Z.
FormFamily coordinate_family() {
  return user_family({form(Q, {1, 0, 0}), form(Q, {0, 1, 0}), form(Q, {0, 0, 1}),
                      form(Q, {1, 1, 1})},
                     3);
}

std::string form_text(const LinearForm &f) { return f.to_string(*default_fiber_vars(f.size())); }

} // namespace

TEST_CASE("ell and index tuples") {
  CHECK(ell(2, 3, 2) == 4);
  CHECK(ell(3, 4, 2) == 8);
  CHECK(ell(1, 2, 2) == 2);
  auto t = index_tuples(4, 2);
  CHECK(t.size() == 6);
  CHECK(to_string(t.front()) == "(1,2)");
  CHECK(to_string(t.back()) == "(3,4)");
  CHECK(index_tuples(5, 3).size() == 10);
  CHECK_THROWS_AS(ell(1, 2, 3), InvalidInput);
}

TEST_CASE("vandermonde family") {
  FormFamily f = vandermonde_family(Q, 3, 4);
  REQUIRE(f.size() == 4);
  CHECK(f.provenance == FamilyProvenance::Vandermonde);
  CHECK(f.independent);
  CHECK(form_text(f.forms[0]) == "X1");
  CHECK(f.forms[3] == form(Q, {1, 3, 9}));
  FormFamily f5 = vandermonde_family(FieldCtx::prime(5), 3, 5);
  CHECK(f5.forms[4] == form(FieldCtx::prime(5), {1, 4, 1}));
  CHECK(f5.independent);
  CHECK_THROWS_AS(vandermonde_family(FieldCtx::prime(3), 3, 4), FieldTooSmall);
}

TEST_CASE("F2 family") {
  FormFamily f = f2_family(3);
  REQUIRE(f.size() == 4);
  CHECK(f.provenance == FamilyProvenance::F2Canonical);
  CHECK(f.independent);
  CHECK(f.forms[3] == form(FieldCtx::prime(2), {1, 1, 1}));
  FormFamily one = f2_family(1);
  CHECK(one.size() == 1);
  CHECK_FALSE(one.notes.empty());
}

TEST_CASE("independence") {
  CHECK(check_independent({form(Q, {1, 0}), form(Q, {0, 1}), form(Q, {1, 1})}, 2));
  CHECK_FALSE(check_independent({form(Q, {1, 2}), form(Q, {2, 4}), form(Q, {1, 1})}, 2));
  CHECK(check_independent({form(Q, {1, 2, 3})}, 3));
  FormFamily u = user_family({form(Q, {1, 0}), form(Q, {2, 0})}, 2);
  CHECK_FALSE(u.independent);
  CHECK(u.provenance == FamilyProvenance::UserSupplied);
}

TEST_CASE("independence of random families against dense rank") {
  testgen::Rng rng(909);
  for (int t = 0; t < 60; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(2, 3));
    std::size_t count = static_cast<std::size_t>(rng.uniform(static_cast<int>(m), 5));
    std::vector<LinearForm> forms;
    for (std::size_t i = 0; i < count; ++i)
      forms.push_back(testgen::random_form(rng, Q, m, 1));
    bool expected = true;
    for (const auto &idx : index_tuples(count, m)) {
      std::vector<std::vector<FieldElem>> rows;
      for (std::size_t i : idx)
        rows.push_back(forms[i - 1].coeffs());
      expected = expected && oracle::dense_rank(rows) == m;
    }
    CHECK(check_independent(forms, m) == expected);
  }
}

TEST_CASE("claim and selection on (XZ)") {
  FormFamily f = coordinate_family();
  CHECK(f.independent);
  CHECK(claim_holds(xz(), {f.forms[1], f.forms[3]}));
  CHECK_FALSE(claim_holds(xz(), {f.forms[0], f.forms[1]}));
  auto all = exhaustive_search(xz(), f, 2);
  REQUIRE(all.size() == 1);
  CHECK(to_string(all.front()) == "(2,4)");
  auto g = greedy_select(xz(), f, 2);
  REQUIRE(g);
  CHECK(to_string(*g) == "(2,4)");

  // Vandermonde rows a, b meet XZ = 0 only at the origin unless one of
  // them is X itself (a = 0).
  FormFamily v = vandermonde_family(Q, 3, 4);
  auto vall = exhaustive_search(xz(), v, 2);
  std::vector<std::string> got;
  for (const auto &t : vall)
    got.push_back(to_string(t));
  CHECK(got == std::vector<std::string>{"(2,3)", "(2,4)", "(3,4)"});
  auto vg = greedy_select(xz(), v, 2);
  REQUIRE(vg);
  CHECK(to_string(*vg) == "(2,3)");
}

TEST_CASE("greedy picks lie among exhaustive picks") {
  testgen::Rng rng(910);
  for (int t = 0; t < 60; ++t) {
    std::size_t m = static_cast<std::size_t>(rng.uniform(3, 4));
    MonomialIdeal mi = testgen::random_monomial_ideal(rng, m, 3, 2);
    auto fv = default_fiber_vars(m);
    std::vector<Poly> gens;
    for (const auto &g : mi.min_gens())
      gens.push_back(Poly::monomial(fv, g, Q.one()));
    HomogIdeal big(fv, Q, gens);
    int dim = krull_dimension(big);
    if (dim <= 0)
      continue;
    std::size_t n = static_cast<std::size_t>(dim);
    FormFamily f = vandermonde_family(Q, m, m + 2);
    auto all = exhaustive_search(big, f, n);
    auto g = greedy_select(big, f, n);
    if (g)
      CHECK(std::find(all.begin(), all.end(), *g) != all.end());
    for (const auto &tuple : all) {
      std::vector<LinearForm> sel;
      for (std::size_t i : tuple)
        sel.push_back(f.forms[i - 1]);
      CHECK(is_zero_dimensional(big.plus([&] {
        std::vector<Poly> ps;
        for (const auto &lf : sel)
          ps.push_back(lf.to_poly(fv));
        return ps;
      }())));
    }
  }
}

TEST_CASE("find_reduction on (x^a, xy, y^b)") {
  for (auto [a, b] : {std::pair{2, 3}, std::pair{2, 5}}) {
    LocalIdeal q = ideal({"x^" + std::to_string(a), "x*y", "y^" + std::to_string(b)});
    SearchOptions opts;
    opts.fiber_vars = xyz();
    SearchResult r = find_reduction(q, coordinate_family(), opts);
    REQUIRE(r.certificate);
    CHECK(r.greedy_succeeded);
    CHECK(to_string(r.certificate->indices) == "(2,4)");
    CHECK(r.certificate->claim_passed);
    CHECK(r.certificate->sop);
    CHECK(r.certificate->reduction_k >= 1);
    CHECK_FALSE(verify_certificate(q, *r.certificate).has_value());
    // The b of the certificate is a reduction by direct check.
    LocalIdeal red(q.vars(), Q, r.certificate->b_gens);
    CHECK(reduction_number(q, red) == r.certificate->reduction_k);
  }
}

TEST_CASE("tampered certificates are caught") {
  LocalIdeal q = ideal({"x^2", "x*y", "y^3"});
  SearchResult r = find_reduction(q, vandermonde_family(Q, 3, 4));
  REQUIRE(r.certificate);
  ReductionCertificate bad_k = *r.certificate;
  bad_k.reduction_k += 1;
  CHECK(verify_certificate(q, bad_k).has_value());
  ReductionCertificate bad_b = *r.certificate;
  bad_b.b_gens[0] = bad_b.b_gens[0] + parse_poly("x^2", q.vars(), Q);
  CHECK(verify_certificate(q, bad_b).has_value());
  ReductionCertificate bad_forms = *r.certificate;
  bad_forms.forms[0] = form(Q, {1, 0, 0});
  CHECK(verify_certificate(q, bad_forms).has_value());
}

TEST_CASE("find_reduction input errors") {
  LocalIdeal q = ideal({"x^2", "x*y", "y^3"});
  CHECK_THROWS_AS(find_reduction(ideal({"x^2", "x*y"}), vandermonde_family(Q, 2, 2), {0, 8, 12}),
                  NotPrimary);
  CHECK_THROWS(find_reduction(q, vandermonde_family(Q, 2, 4)));
  CHECK_THROWS_AS(find_reduction(q, user_family({form(Q, {1, 0, 0}), form(Q, {2, 0, 0})}, 3)),
                  InvalidInput);
}

TEST_CASE("auto family sizing") {
  LocalIdeal q = ideal({"x^2", "x*y", "y^3"});
  FiberPresentation fp = fiber_presentation(q, default_dmax(q), xyz());
  FormFamily f = auto_family(fp, 2);
  CHECK(f.size() == 4);
  CHECK(f.provenance == FamilyProvenance::Vandermonde);
  LocalIdeal q2 = ideal({"x^2", "x*y", "y^3"}, FieldCtx::prime(2));
  FiberPresentation fp2 = fiber_presentation(q2, default_dmax(q2), xyz());
  CHECK(auto_family(fp2, 2).provenance == FamilyProvenance::F2Canonical);
}

TEST_CASE("claim agrees with direct reduction checks") {
  LocalIdeal q = ideal({"x^2", "x*y", "y^3"});
  FormFamily f = vandermonde_family(Q, 3, 4);
  for (const auto &t : index_tuples(4, 2)) {
    std::vector<LinearForm> sel{f.forms[t[0] - 1], f.forms[t[1] - 1]};
    CrosscheckResult c = claim_crosscheck(q, xz(), sel);
    CHECK(c.claim == c.direct.has_value());
    if (c.claim)
      CHECK(c.sop);
  }
}
