#include "redlocal/cli.hpp"
#include "redlocal/errors.hpp"

#include <doctest.h>

using namespace redlocal;
using namespace redlocal::cli;

namespace {

ProblemSpec example_spec() {
  ProblemSpec s;
  s.vars = {"x", "y"};
  s.gens = {"x^2", "x*y", "y^3"};
  s.fiber_vars = {"X", "Y", "Z"};
  return s;
}

} // namespace

TEST_CASE("problem documents round-trip") {
  ProblemSpec s = example_spec();
  s.family.kind = "explicit";
  s.family.rows = {{"1", "0", "0"}, {"1", "1", "1"}, {"1", "2", "4"}, {"1/2", "3", "9"}};
  s.primes = {{"X"}, {"Z"}};
  s.d_max = 5;
  s.strategy = "exhaustive";
  CHECK(parse_spec(emit_spec(s)) == s);
  CHECK(parse_spec(emit_spec(example_spec())) == example_spec());
  Json doc = emit_spec(example_spec());
  CHECK(emit_spec(parse_spec(doc)).dump() == doc.dump());
}

TEST_CASE("problem document validation") {
  Json doc = emit_spec(example_spec());
  doc["surprise"] = 1;
  CHECK_THROWS_AS(parse_spec(doc), ParseError);
  Json bad_kind = emit_spec(example_spec());
  bad_kind["family"]["kind"] = "magic";
  CHECK_THROWS_AS(parse_spec(bad_kind), ParseError);
  Json bad_strategy = emit_spec(example_spec());
  bad_strategy["strategy"] = "random";
  CHECK_THROWS_AS(parse_spec(bad_strategy), ParseError);
  ProblemSpec wrong_fiber = example_spec();
  wrong_fiber.fiber_vars = {"X", "Y"};
  CHECK_THROWS(resolve(wrong_fiber));
}

TEST_CASE("list helpers") {
  CHECK(split_list("x^2, x*y ,y^3") == std::vector<std::string>{"x^2", "x*y", "y^3"});
  CHECK(split_list("(1,2), 3") == std::vector<std::string>{"(1,2)", "3"});
  auto rows = parse_forms_text("1 0 0\n# comment\n1,1,1\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[1] == std::vector<std::string>{"1", "1", "1"});
}

TEST_CASE("commands on the (XZ) example") {
  ProblemSpec s = example_spec();
  Report fc = cmd_fibercone(s);
  CHECK(fc.exit_code == kExitOk);
  Report dr = cmd_degrad(s);
  CHECK(dr.exit_code == kExitOk);
  CHECK(dr.doc["result"]["degrad"]["total"] == 2);
  Report fr = cmd_find_reduction(s);
  REQUIRE(fr.exit_code == kExitOk);
  // Auto family: Vandermonde rows 0..3, greedy takes the first valid pair.
  CHECK(fr.doc["result"]["certificate"]["indices"] == Json::array({2, 3}));
  CHECK(cmd_verify(s, fr.doc).exit_code == kExitOk);
  Json tampered = fr.doc;
  tampered["result"]["certificate"]["reduction_k"] =
      tampered["result"]["certificate"]["reduction_k"].get<int>() + 1;
  CHECK(cmd_verify(s, tampered).exit_code == kExitCertificateMismatch);
  Report mu = cmd_multiplicity(s);
  CHECK(mu.exit_code == kExitOk);
}

TEST_CASE("reports are deterministic") {
  ProblemSpec s = example_spec();
  CHECK(cmd_find_reduction(s).doc.dump() == cmd_find_reduction(s).doc.dump());
  CHECK(render(cmd_fibercone(s), true) == render(cmd_fibercone(s), true));
}

TEST_CASE("exit codes for failures") {
  ProblemSpec np = example_spec();
  np.gens = {"x^2", "x*y", "x*y^2"};
  np.e_cap = 12;
  CHECK(cmd_find_reduction(np).exit_code == kExitNotPrimary);
  ProblemSpec bad = example_spec();
  bad.gens = {"x^2", "x*w", "y^3"};
  CHECK(cmd_fibercone(bad).exit_code == kExitInput);
  ProblemSpec small = example_spec();
  small.d_max = 2;
  CHECK(cmd_fibercone(small).exit_code == kExitInconclusive);
}

TEST_CASE("characteristic two uses the F2 family") {
  ProblemSpec s = example_spec();
  s.field = "Fp:2";
  s.family.kind = "f2";
  Report r = cmd_find_reduction(s);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.doc["result"]["family"]["provenance"] == "F2Canonical");
}

TEST_CASE("paper examples report") {
  PaperOptions shallow;
  shallow.d_max = 1;
  CHECK(cmd_paper_examples(shallow).exit_code == kExitInconclusive);
  PaperOptions no_k;
  no_k.k_max = 0;
  CHECK(cmd_paper_examples(no_k).exit_code == kExitAssertion);
}
