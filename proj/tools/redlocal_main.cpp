#include "redlocal/cli.hpp"
#include "redlocal/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace redlocal;
using namespace redlocal::cli;

namespace {

struct Flags {
  std::string spec_file;
  std::string field, vars, gens, fiber_vars, forms;
  std::vector<std::string> primes;
  std::optional<unsigned> d_max, k_max, e_cap, s_max;
  std::string strategy;
  bool json = false;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string &path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(path + ": " + e.what());
  }
}

ProblemSpec build_spec(const Flags &f) {
  ProblemSpec s;
  if (!f.spec_file.empty())
    s = parse_spec(read_json(f.spec_file));
  if (!f.field.empty())
    s.field = f.field;
  if (!f.vars.empty())
    s.vars = split_list(f.vars);
  if (!f.gens.empty())
    s.gens = split_list(f.gens);
  if (!f.fiber_vars.empty())
    s.fiber_vars = split_list(f.fiber_vars);
  if (f.forms == "auto" || f.forms == "f2") {
    s.family = {f.forms, {}};
  } else if (!f.forms.empty()) {
    s.family = {"explicit", parse_forms_text(read_file(f.forms))};
  }
  for (const auto &p : f.primes)
    s.primes.push_back(split_list(p));
  if (f.d_max)
    s.d_max = *f.d_max;
  if (f.k_max)
    s.k_max = *f.k_max;
  if (f.e_cap)
    s.e_cap = *f.e_cap;
  if (f.s_max)
    s.s_max = *f.s_max;
  if (!f.strategy.empty())
    s.strategy = f.strategy;
  if (s.vars.empty() || s.gens.empty())
    throw ParseError("both --vars and --gens (or a --spec file) are required");
  return s;
}

void add_problem_flags(CLI::App *cmd, Flags &f) {
  cmd->add_option("--spec", f.spec_file, "Problem spec JSON file");
  cmd->add_option("--field", f.field, "Q or Fp:<p>");
  cmd->add_option("--vars", f.vars, "Local variables, comma separated");
  cmd->add_option("--gens", f.gens, "Generators of q, comma separated");
  cmd->add_option("--fiber-vars", f.fiber_vars, "Fiber variable names (default X1..Xm)");
  cmd->add_option("--forms", f.forms, "Form family: auto, f2 or a file of coefficient rows");
  cmd->add_option("--prime", f.primes, "Prime of Q for deg.rad, comma separated generators");
  cmd->add_option("--dmax", f.d_max, "Largest null-form degree scanned");
  cmd->add_option("--kmax", f.k_max, "Largest reduction number tried");
  cmd->add_option("--ecap", f.e_cap, "Truncation cap for witness searches");
  cmd->add_option("--smax", f.s_max, "Number of powers sampled for multiplicities");
  cmd->add_option("--strategy", f.strategy, "greedy or exhaustive")
      ->check(CLI::IsMember({"greedy", "exhaustive"}));
  cmd->add_flag("--json", f.json, "Machine-readable report");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Reductions of m-primary ideals via fiber cones"};
  app.require_subcommand(1);
  Flags f;
  std::string certificate_file;

  auto *fibercone = app.add_subcommand("fibercone", "Null-form presentation of the fiber cone");
  auto *degrad_cmd = app.add_subcommand("degrad", "deg.rad of the fiber cone");
  auto *find = app.add_subcommand("find-reduction", "Search for a certified reduction");
  auto *verify = app.add_subcommand("verify-reduction", "Re-check a stored certificate");
  auto *mult = app.add_subcommand("multiplicity", "Multiplicity table over a form family");
  auto *paper = app.add_subcommand("paper-examples", "Regression on the worked examples");
  for (auto *cmd : {fibercone, degrad_cmd, find, verify, mult})
    add_problem_flags(cmd, f);
  verify->add_option("--certificate", certificate_file, "Certificate or report JSON")
      ->required();
  paper->add_option("--dmax", f.d_max, "Largest null-form degree scanned");
  paper->add_option("--kmax", f.k_max, "Largest reduction number tried");
  paper->add_option("--ecap", f.e_cap, "Truncation cap for witness searches");
  paper->add_option("--smax", f.s_max, "Number of powers sampled for multiplicities");
  paper->add_flag("--json", f.json, "Machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  Report report;
  try {
    if (paper->parsed()) {
      PaperOptions po;
      po.d_max = f.d_max.value_or(0);
      po.k_max = f.k_max.value_or(8);
      po.e_cap = f.e_cap.value_or(64);
      po.s_max = f.s_max.value_or(0);
      report = cmd_paper_examples(po);
    } else {
      ProblemSpec spec = build_spec(f);
      if (fibercone->parsed())
        report = cmd_fibercone(spec);
      else if (degrad_cmd->parsed())
        report = cmd_degrad(spec);
      else if (find->parsed())
        report = cmd_find_reduction(spec);
      else if (mult->parsed())
        report = cmd_multiplicity(spec);
      else
        report = cmd_verify(spec, read_json(certificate_file));
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  std::cout << render(report, f.json);
  return report.exit_code;
}
