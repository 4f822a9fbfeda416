#include "redlocal/cli.hpp"

#include "redlocal/degree_radical.hpp"
#include "redlocal/errors.hpp"

#include <sstream>

namespace redlocal::cli {

namespace {

struct ErrorInfo {
  int code;
  const char *type;
};

ErrorInfo classify(const Error &e) {
  if (dynamic_cast<const NotPrimary *>(&e))
    return {kExitNotPrimary, "NotPrimary"};
  if (dynamic_cast<const ParseError *>(&e))
    return {kExitInput, "ParseError"};
  if (dynamic_cast<const NotMonomial *>(&e))
    return {kExitInconclusive, "NotMonomial"};
  if (dynamic_cast<const EscalateSamples *>(&e))
    return {kExitInconclusive, "EscalateSamples"};
  if (dynamic_cast<const FieldTooSmall *>(&e))
    return {kExitInput, "FieldTooSmall"};
  if (dynamic_cast<const ContainmentFailure *>(&e))
    return {kExitInput, "ContainmentFailure"};
  if (dynamic_cast<const DimensionMismatch *>(&e))
    return {kExitInput, "DimensionMismatch"};
  if (dynamic_cast<const NonPrimeModulus *>(&e))
    return {kExitInput, "NonPrimeModulus"};
  if (dynamic_cast<const NotHomogeneous *>(&e))
    return {kExitInput, "NotHomogeneous"};
  return {kExitInput, "InvalidInput"};
}

// Runs body with uniform error handling; body fills result, diagnostics
// and the human digest.
template <class Body>
Report run(const std::string &command, const ProblemSpec *spec, Body body) {
  Report r;
  r.doc["command"] = command;
  r.doc["input"] = spec ? emit_spec(*spec) : Json(nullptr);
  std::ostringstream human;
  human << command << "\n";
  try {
    body(r, human);
  } catch (const Error &e) {
    ErrorInfo info = classify(e);
    r.exit_code = info.code;
    r.doc["error"] = {{"type", info.type}, {"message", e.what()}};
    human << "error: " << info.type << ": " << e.what() << "\n";
  }
  r.doc["exit_status"] = r.exit_code;
  human << "exit status " << r.exit_code << "\n";
  r.human = human.str();
  return r;
}

unsigned dmax_of(const ProblemSpec &spec, const Problem &p) {
  return spec.d_max ? spec.d_max : default_dmax(p.q);
}

FiberPresentation presentation_of(const ProblemSpec &spec, const Problem &p) {
  return fiber_presentation(p.q, dmax_of(spec, p), p.fiber_vars, spec.e_cap);
}

Json witness_json(const LocalIdeal &q, unsigned e_cap) {
  auto w = primary_witness(q, e_cap);
  if (!w)
    throw NotPrimary("q = " + q.to_string() + " has no m-power witness up to order " +
                     std::to_string(e_cap));
  return {{"e_star", w->e_star}, {"colength", w->colength}};
}

std::string join(const std::vector<Poly> &polys) {
  std::string s;
  for (std::size_t i = 0; i < polys.size(); ++i)
    s += (i ? ", " : "") + polys[i].to_string();
  return "(" + (polys.empty() ? std::string("0") : s) + ")";
}

std::string e_text(const std::optional<std::int64_t> &e) {
  return e ? std::to_string(*e) : "inf";
}

std::vector<HomogIdeal> parse_primes(const ProblemSpec &spec, const Problem &p) {
  std::vector<HomogIdeal> out;
  for (const auto &gens : spec.primes) {
    std::vector<Poly> polys;
    for (const auto &g : gens)
      polys.push_back(parse_poly(g, p.fiber_vars, p.field));
    out.emplace_back(p.fiber_vars, p.field, std::move(polys));
  }
  return out;
}

SearchOptions search_options(const ProblemSpec &spec, const Problem &p) {
  SearchOptions so;
  so.d_max = spec.d_max;
  so.k_max = spec.k_max;
  so.e_cap = spec.e_cap;
  so.strategy = spec.strategy == "exhaustive" ? SearchStrategy::ExhaustiveOnly
                                              : SearchStrategy::GreedyThenExhaustive;
  so.fiber_vars = p.fiber_vars;
  return so;
}

std::optional<std::int64_t> try_multiplicity(const LocalIdeal &i, const ProblemSpec &spec) {
  try {
    return hs_multiplicity_auto(i, spec.s_max, 16, spec.e_cap).e;
  } catch (const EscalateSamples &) {
    return std::nullopt;
  }
}

} // namespace

Report cmd_fibercone(const ProblemSpec &spec) {
  return run("fibercone", &spec, [&](Report &r, std::ostringstream &h) {
    Problem p = resolve(spec);
    Json witness = witness_json(p.q, spec.e_cap);
    FiberPresentation fp = presentation_of(spec, p);
    r.doc["result"] = {{"presentation", presentation_json(fp)}};
    r.doc["diagnostics"] = {{"stabilized", fp.stabilized},
                            {"d_max", fp.d_max},
                            {"witness", witness}};
    h << "q = " << p.q.to_string() << "\n";
    h << "Q' = " << join(fp.gens()) << "\n";
    h << "dim k[X]/Q' = " << fp.dim_check << ", stabilized = "
      << (fp.stabilized ? "yes" : "no") << " (D_max = " << fp.d_max << ")\n";
    if (!fp.stabilized)
      r.exit_code = kExitInconclusive;
  });
}

Report cmd_degrad(const ProblemSpec &spec) {
  return run("degrad", &spec, [&](Report &r, std::ostringstream &h) {
    Problem p = resolve(spec);
    FiberPresentation fp = presentation_of(spec, p);
    DegRadReport dr = spec.primes.empty()
                          ? degrad(fp)
                          : degrad_from_decomposition(fp.ideal(), parse_primes(spec, p));
    r.doc["result"] = {{"presentation", presentation_json(fp)}, {"degrad", degrad_json(dr)}};
    r.doc["diagnostics"] = {{"stabilized", fp.stabilized}, {"d_max", fp.d_max}};
    h << "Q' = " << join(fp.gens()) << "\n";
    for (const auto &pr : dr.primes)
      h << "  minimal prime " << pr.prime << "  degree " << pr.degree << "\n";
    h << "deg.rad = " << dr.total << " (" << to_string(dr.source) << ")\n";
    if (!fp.stabilized) {
      h << "presentation not stabilized; deg.rad refers to Q'\n";
      r.exit_code = kExitInconclusive;
    }
  });
}

Report cmd_find_reduction(const ProblemSpec &spec) {
  return run("find-reduction", &spec, [&](Report &r, std::ostringstream &h) {
    Problem p = resolve(spec);
    std::vector<std::string> notes;
    std::optional<FiberPresentation> fp;
    if (spec.family.kind == "auto")
      fp = presentation_of(spec, p);
    FormFamily family = resolve_family(spec, p, fp ? &*fp : nullptr, notes);
    SearchResult res = find_reduction(p.q, family, search_options(spec, p));
    notes.insert(notes.end(), res.notes.begin(), res.notes.end());

    Json result;
    result["family"] = family_json(family, *p.fiber_vars);
    result["presentation"] = presentation_json(res.presentation);
    h << "Q' = " << join(res.presentation.gens()) << "\n";
    h << "family (" << to_string(family.provenance) << "):";
    for (const auto &f : family.forms)
      h << " " << f.to_string(*p.fiber_vars) << ";";
    h << "\n";
    if (res.certificate) {
      ReductionCertificate &c = *res.certificate;
      c.e_q = try_multiplicity(p.q, spec);
      c.e_b = try_multiplicity(LocalIdeal(p.vars, p.field, c.b_gens), spec);
      result["certificate"] = certificate_json(c, *p.fiber_vars);
      h << "reduction " << to_string(c.indices) << ": b = " << join(c.b_gens)
        << ", k = " << c.reduction_k << ", e(q) = " << e_text(c.e_q)
        << ", e(b) = " << e_text(c.e_b) << "\n";
    } else {
      result["certificate"] = nullptr;
      h << "SearchFailed\n";
      r.exit_code = kExitInconclusive;
    }
    r.doc["result"] = result;
    Json tried = Json::array();
    for (const auto &a : res.tried) {
      tried.push_back({{"indices", a.indices}, {"outcome", a.outcome}});
      h << "  tried " << to_string(a.indices) << ": " << a.outcome << "\n";
    }
    r.doc["diagnostics"] = {{"stabilized", res.presentation.stabilized},
                            {"d_max", res.presentation.d_max},
                            {"greedy_succeeded", res.greedy_succeeded},
                            {"candidates_tried", tried},
                            {"notes", notes}};
    for (const auto &n : notes)
      h << "note: " << n << "\n";
  });
}

Report cmd_multiplicity(const ProblemSpec &spec) {
  return run("multiplicity", &spec, [&](Report &r, std::ostringstream &h) {
    Problem p = resolve(spec);
    std::vector<std::string> notes;
    std::optional<FiberPresentation> fp;
    if (spec.family.kind == "auto")
      fp = presentation_of(spec, p);
    FormFamily family = resolve_family(spec, p, fp ? &*fp : nullptr, notes);
    MultiplicityOptions mo{spec.s_max, spec.k_max, spec.e_cap, spec.d_max, p.fiber_vars};
    MultiplicityResult eq = hs_multiplicity_auto(p.q, spec.s_max, 16, spec.e_cap);
    MinMultiplicityResult mm = min_multiplicity_search(p.q, family, mo);

    Json samples = Json::array();
    for (const auto &s : eq.samples)
      samples.push_back({{"s", s.s}, {"colength", s.colength}});
    Json table = Json::array();
    h << "e(q) = " << mm.e_q << "\n";
    for (const auto &row : mm.table) {
      table.push_back({{"tuple", row.tuple},
                       {"e_b", row.e_b ? Json(*row.e_b) : Json("infinity")}});
      h << "  " << to_string(row.tuple) << "  e(b) = " << e_text(row.e_b) << "\n";
    }
    Json argmin = Json::array();
    for (std::size_t i = 0; i < mm.argmin.size(); ++i) {
      argmin.push_back({{"tuple", mm.argmin[i]},
                        {"rees_flag", static_cast<bool>(mm.rees_flag[i])},
                        {"reduction_k", mm.argmin_k[i] ? Json(*mm.argmin_k[i]) : Json(nullptr)}});
      h << "argmin " << to_string(mm.argmin[i])
        << (mm.rees_flag[i] ? " (reduction)" : "") << "\n";
    }
    r.doc["result"] = {{"e_q", mm.e_q},
                       {"samples", samples},
                       {"family", family_json(family, *p.fiber_vars)},
                       {"table", table},
                       {"argmin", argmin},
                       {"min_matches_e_q", mm.min_matches ? Json(*mm.min_matches) : Json(nullptr)}};
    r.doc["diagnostics"] = {{"n_th_differences", eq.differences}, {"notes", notes}};
    if (mm.min_matches && !*mm.min_matches) {
      h << "minimum of the table differs from e(q)\n";
      r.exit_code = kExitAssertion;
    }
  });
}

Report cmd_verify(const ProblemSpec &spec, const Json &certificate) {
  return run("verify-reduction", &spec, [&](Report &r, std::ostringstream &h) {
    Problem p = resolve(spec);
    ReductionCertificate c = certificate_from_json(certificate, p);
    auto problem = verify_certificate(p.q, c, spec.k_max, spec.e_cap);
    r.doc["result"] = {{"certificate", certificate_json(c, *p.fiber_vars)},
                       {"verified", !problem.has_value()},
                       {"mismatch", problem ? Json(*problem) : Json(nullptr)}};
    if (problem) {
      h << "certificate mismatch: " << *problem << "\n";
      r.exit_code = kExitCertificateMismatch;
    } else {
      h << "certificate verified: b = " << join(c.b_gens) << ", k = " << c.reduction_k
        << "\n";
    }
  });
}

} // namespace redlocal::cli
