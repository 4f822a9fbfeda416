#include "redlocal/cli.hpp"

#include "redlocal/errors.hpp"

namespace redlocal::cli {

Json poly_list(const std::vector<Poly> &polys) {
  Json out = Json::array();
  for (const auto &p : polys)
    out.push_back(p.to_string());
  return out;
}

Json presentation_json(const FiberPresentation &fp) {
  Json j;
  j["fiber_vars"] = fp.fiber_vars->names;
  j["gens"] = poly_list(fp.gens());
  Json by_degree = Json::array();
  for (std::size_t d = 1; d < fp.gens_by_degree.size(); ++d)
    if (!fp.gens_by_degree[d].empty())
      by_degree.push_back({{"degree", d}, {"gens", poly_list(fp.gens_by_degree[d])}});
  j["gens_by_degree"] = by_degree;
  j["d_max"] = fp.d_max;
  j["stabilized"] = fp.stabilized;
  j["monomial"] = fp.all_monomial();
  j["dim"] = fp.dim_check;
  j["provenance"] = "computed null-forms up to degree d_max";
  return j;
}

Json degrad_json(const DegRadReport &r) {
  Json j;
  Json primes = Json::array();
  for (const auto &p : r.primes)
    primes.push_back({{"prime", p.prime}, {"degree", p.degree}});
  j["primes"] = primes;
  j["total"] = r.total;
  j["source"] = to_string(r.source);
  return j;
}

Json family_json(const FormFamily &f, const VarSet &fiber_vars) {
  Json j;
  j["provenance"] = to_string(f.provenance);
  j["independent"] = f.independent;
  Json forms = Json::array();
  for (const auto &form : f.forms)
    forms.push_back(form.to_string(fiber_vars));
  j["forms"] = forms;
  j["notes"] = f.notes;
  return j;
}

namespace {

Json coeff_rows(const std::vector<LinearForm> &forms) {
  Json rows = Json::array();
  for (const auto &f : forms) {
    Json row = Json::array();
    for (const auto &c : f.coeffs())
      row.push_back(c.to_string());
    rows.push_back(row);
  }
  return rows;
}

Json optional_int(const std::optional<std::int64_t> &v) {
  return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json certificate_json(const ReductionCertificate &c, const VarSet &fiber_vars) {
  Json j;
  j["indices"] = c.indices;
  j["forms"] = coeff_rows(c.forms);
  Json text = Json::array();
  for (const auto &f : c.forms)
    text.push_back(f.to_string(fiber_vars));
  j["forms_text"] = text;
  j["b_gens"] = poly_list(c.b_gens);
  j["reduction_k"] = c.reduction_k;
  j["sop"] = c.sop;
  j["claim_passed"] = c.claim_passed;
  j["e_q"] = optional_int(c.e_q);
  j["e_b"] = optional_int(c.e_b);
  j["provenance"] = "direct check q^(k+1) = b q^k in truncated power series";
  return j;
}

ReductionCertificate certificate_from_json(const Json &doc, const Problem &p) {
  const Json *c = &doc;
  if (doc.contains("result") && doc.at("result").contains("certificate"))
    c = &doc.at("result").at("certificate");
  if (!c->is_object())
    throw ParseError("certificate must be a JSON object");
  ReductionCertificate cert;
  try {
    cert.indices = c->at("indices").get<IndexTuple>();
    for (const auto &row : c->at("forms")) {
      std::vector<FieldElem> coeffs;
      for (const auto &t : row)
        coeffs.push_back(p.field.parse(t.get<std::string>()));
      cert.forms.emplace_back(std::move(coeffs));
    }
    for (const auto &g : c->at("b_gens"))
      cert.b_gens.push_back(parse_poly(g.get<std::string>(), p.vars, p.field));
    cert.reduction_k = c->at("reduction_k").get<unsigned>();
    cert.sop = c->at("sop").get<bool>();
    cert.claim_passed = c->value("claim_passed", false);
    if (c->contains("e_q") && !c->at("e_q").is_null())
      cert.e_q = c->at("e_q").get<std::int64_t>();
    if (c->contains("e_b") && !c->at("e_b").is_null())
      cert.e_b = c->at("e_b").get<std::int64_t>();
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
  return cert;
}

std::string render(const Report &r, bool json) {
  if (json)
    return r.doc.dump(2) + "\n";
  return r.human;
}

} // namespace redlocal::cli
