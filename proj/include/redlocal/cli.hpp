#pragma once

#include "redlocal/degree_radical.hpp"
#include "redlocal/multiplicity.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace redlocal::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitAssertion = 1,
  kExitNotPrimary = 2,
  kExitInput = 3,
  kExitInconclusive = 4,
  kExitCertificateMismatch = 5,
};

struct FamilySpec {
  // "auto", "f2" or "explicit".
  std::string kind = "auto";
  // Coefficient rows (rational literals) for "explicit".
  std::vector<std::vector<std::string>> rows;
  bool operator==(const FamilySpec &) const = default;
};

struct ProblemSpec {
  std::string field = "Q";
  std::vector<std::string> vars;
  std::vector<std::string> gens;
  // Empty: X1..Xm.
  std::vector<std::string> fiber_vars;
  FamilySpec family;
  // Optional prime decomposition of Q, one generator list per prime.
  std::vector<std::vector<std::string>> primes;
  unsigned d_max = 0;
  unsigned k_max = 8;
  unsigned e_cap = 64;
  unsigned s_max = 0;
  std::string strategy = "greedy";
  bool operator==(const ProblemSpec &) const = default;
};

// Throws ParseError on malformed documents.
ProblemSpec parse_spec(const Json &doc);
Json emit_spec(const ProblemSpec &spec);

// Splits on commas outside parentheses, trimming blanks.
std::vector<std::string> split_list(const std::string &text);
// Whitespace- or comma-separated coefficient rows; '#' starts a comment.
std::vector<std::vector<std::string>> parse_forms_text(const std::string &text);

// Parsed view of a ProblemSpec.
struct Problem {
  FieldCtx field;
  VarSetPtr vars;
  VarSetPtr fiber_vars;
  LocalIdeal q;
};
Problem resolve(const ProblemSpec &spec);
FormFamily resolve_family(const ProblemSpec &spec, const Problem &p,
                          const FiberPresentation *fp, std::vector<std::string> &notes);

Json poly_list(const std::vector<Poly> &polys);
Json presentation_json(const FiberPresentation &fp);
Json degrad_json(const DegRadReport &r);
Json family_json(const FormFamily &f, const VarSet &fiber_vars);
Json certificate_json(const ReductionCertificate &c, const VarSet &fiber_vars);
// Accepts a bare certificate or a find-reduction report containing one.
ReductionCertificate certificate_from_json(const Json &doc, const Problem &p);

struct Report {
  Json doc;
  int exit_code = kExitOk;
  std::string human;
};

Report cmd_fibercone(const ProblemSpec &spec);
Report cmd_degrad(const ProblemSpec &spec);
Report cmd_find_reduction(const ProblemSpec &spec);
Report cmd_multiplicity(const ProblemSpec &spec);
Report cmd_verify(const ProblemSpec &spec, const Json &certificate);

struct PaperOptions {
  unsigned d_max = 0;
  unsigned k_max = 8;
  unsigned e_cap = 64;
  unsigned s_max = 0;
};
Report cmd_paper_examples(const PaperOptions &opts = {});

// Rendered form of a report for the terminal.
std::string render(const Report &r, bool json);

} // namespace redlocal::cli
