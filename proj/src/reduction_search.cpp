#include "redlocal/reduction_search.hpp"

#include "redlocal/degree_radical.hpp"
#include "redlocal/errors.hpp"
#include "redlocal/linalg.hpp"

#include <algorithm>

namespace redlocal {

namespace {

// Calls visit on every strictly increasing k-subset of {0..n-1}, in lex
// order, until visit returns false.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit visit) {
  if (k > n)
    return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    if (!visit(idx))
      return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Poly> form_polys(const std::vector<LinearForm> &forms, const VarSetPtr &vars) {
  std::vector<Poly> out;
  for (const auto &f : forms)
    out.push_back(f.to_poly(vars));
  return out;
}

std::vector<LinearForm> pick(const FormFamily &f, const IndexTuple &t) {
  std::vector<LinearForm> out;
  for (std::size_t i : t)
    out.push_back(f.forms.at(i - 1));
  return out;
}

void check_family(const FormFamily &f, std::size_t m, std::size_t n) {
  for (const auto &form : f.forms)
    if (form.size() != m)
      throw LengthMismatch("form with " + std::to_string(form.size()) +
                           " coefficients, expected " + std::to_string(m));
  if (f.size() < n)
    throw InvalidInput("family has " + std::to_string(f.size()) +
                       " forms, fewer than n = " + std::to_string(n));
  if (!check_independent(f.forms, m))
    throw InvalidInput("form family is not independent");
}

} // namespace

std::string to_string(FamilyProvenance p) {
  switch (p) {
  case FamilyProvenance::Vandermonde:
    return "Vandermonde";
  case FamilyProvenance::F2Canonical:
    return "F2Canonical";
  case FamilyProvenance::UserSupplied:
    return "UserSupplied";
  }
  return "";
}

std::string to_string(const IndexTuple &t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::vector<IndexTuple> index_tuples(std::size_t l, std::size_t n) {
  std::vector<IndexTuple> out;
  for_each_subset(l, n, [&](const std::vector<std::size_t> &idx) {
    IndexTuple t;
    for (std::size_t i : idx)
      t.push_back(i + 1);
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

unsigned ell(unsigned d, unsigned m, unsigned n) {
  if (d < 1 || n < 1 || n > m)
    throw InvalidInput("ell needs d >= 1 and 1 <= n <= m");
  return d * (m - n) + n;
}

FormFamily vandermonde_family(FieldCtx field, std::size_t m, std::size_t l) {
  if (m == 0)
    throw InvalidInput("no fiber variables");
  if (auto size = field.size(); size && *size < l)
    throw FieldTooSmall(field.to_string() + " has fewer than " + std::to_string(l) +
                        " elements");
  FormFamily f;
  f.provenance = FamilyProvenance::Vandermonde;
  for (std::size_t j = 0; j < l; ++j) {
    FieldElem a = field.element(j);
    std::vector<FieldElem> c;
    FieldElem p = field.one();
    for (std::size_t i = 0; i < m; ++i) {
      c.push_back(p);
      p = p * a;
    }
    f.forms.emplace_back(std::move(c));
  }
  f.independent = check_independent(f.forms, m);
  return f;
}

FormFamily f2_family(std::size_t m) {
  if (m == 0)
    throw InvalidInput("no fiber variables");
  FieldCtx f2 = FieldCtx::prime(2);
  FormFamily f;
  f.provenance = FamilyProvenance::F2Canonical;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<FieldElem> c(m, f2.zero());
    c[i] = f2.one();
    f.forms.emplace_back(std::move(c));
  }
  if (m == 1)
    f.notes.push_back("DegenerateFamily: X1 and the sum of all variables coincide for m = 1");
  else
    f.forms.emplace_back(std::vector<FieldElem>(m, f2.one()));
  f.independent = check_independent(f.forms, m);
  return f;
}

FormFamily user_family(std::vector<LinearForm> forms, std::size_t m) {
  FormFamily f;
  f.provenance = FamilyProvenance::UserSupplied;
  f.forms = std::move(forms);
  for (const auto &form : f.forms)
    if (form.size() != m)
      throw LengthMismatch("form with " + std::to_string(form.size()) +
                           " coefficients, expected " + std::to_string(m));
  f.independent = check_independent(f.forms, m);
  return f;
}

bool check_independent(const std::vector<LinearForm> &forms, std::size_t m) {
  auto rows_of = [&](const std::vector<std::size_t> &idx) {
    std::vector<std::vector<FieldElem>> rows;
    for (std::size_t i : idx)
      rows.push_back(forms[i].coeffs());
    return rows;
  };
  if (forms.size() < m) {
    std::vector<std::size_t> all(forms.size());
    for (std::size_t i = 0; i < all.size(); ++i)
      all[i] = i;
    return linalg::rank(rows_of(all)) == forms.size();
  }
  bool ok = true;
  for_each_subset(forms.size(), m, [&](const std::vector<std::size_t> &idx) {
    ok = linalg::rank(rows_of(idx)) == m;
    return ok;
  });
  return ok;
}

bool claim_holds(const HomogIdeal &q, const std::vector<LinearForm> &forms) {
  return is_zero_dimensional(q.plus(form_polys(forms, q.vars())));
}

std::optional<IndexTuple> greedy_select(const HomogIdeal &q, const FormFamily &f,
                                        std::size_t n) {
  HomogIdeal j = q;
  std::vector<bool> used(f.size(), false);
  IndexTuple chosen;
  for (std::size_t t = 1; t <= n; ++t) {
    bool found = false;
    for (std::size_t i = 0; i < f.size() && !found; ++i) {
      if (used[i])
        continue;
      HomogIdeal next = j.plus({f.forms[i].to_poly(q.vars())});
      if (krull_dimension(next) <= static_cast<int>(n - t)) {
        used[i] = true;
        chosen.push_back(i + 1);
        j = std::move(next);
        found = true;
      }
    }
    if (!found)
      return std::nullopt;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<IndexTuple> exhaustive_search(const HomogIdeal &q, const FormFamily &f,
                                          std::size_t n) {
  std::vector<IndexTuple> out;
  for (auto &t : index_tuples(f.size(), n))
    if (claim_holds(q, pick(f, t)))
      out.push_back(std::move(t));
  return out;
}

std::vector<Poly> apply_forms(const std::vector<LinearForm> &forms, const LocalIdeal &q) {
  std::vector<Poly> out;
  for (const auto &f : forms)
    out.push_back(apply_form(f, q.gens()));
  return out;
}

SearchResult find_reduction(const LocalIdeal &q, const FormFamily &f,
                            const SearchOptions &opts) {
  const std::size_t m = q.gens().size();
  const std::size_t n = q.vars()->size();
  check_family(f, m, n);
  if (!primary_witness(q, opts.e_cap))
    throw NotPrimary("q = " + q.to_string() + " has no m-power witness up to order " +
                     std::to_string(opts.e_cap));
  VarSetPtr fv = opts.fiber_vars ? opts.fiber_vars : default_fiber_vars(m);
  unsigned d_max = opts.d_max ? opts.d_max : default_dmax(q);

  SearchResult res{std::nullopt, fiber_presentation(q, d_max, fv, opts.e_cap), false, {}, {}};
  if (!res.presentation.stabilized)
    res.notes.push_back("presentation not stabilized at D_max = " + std::to_string(d_max) +
                        "; claim filter runs on an under-approximation");
  HomogIdeal big_q = res.presentation.ideal();

  std::vector<IndexTuple> candidates;
  if (opts.strategy == SearchStrategy::GreedyThenExhaustive) {
    if (auto g = greedy_select(big_q, f, n)) {
      res.greedy_succeeded = true;
      candidates.push_back(*g);
    } else {
      res.notes.push_back("greedy selection failed; falling back to exhaustive search");
    }
  }
  for (auto &t : exhaustive_search(big_q, f, n))
    if (std::find(candidates.begin(), candidates.end(), t) == candidates.end())
      candidates.push_back(std::move(t));

  for (const auto &t : candidates) {
    std::vector<LinearForm> forms = pick(f, t);
    LocalIdeal b(q.vars(), q.field(), apply_forms(forms, q));
    if (b.gens().size() < n || !primary_witness(b, opts.e_cap)) {
      res.tried.push_back({t, "b is not m-primary"});
      continue;
    }
    auto k = reduction_number(q, b, {opts.k_max, opts.e_cap});
    if (!k) {
      res.tried.push_back({t, "no reduction up to k_max = " + std::to_string(opts.k_max)});
      continue;
    }
    res.tried.push_back({t, "certified with k = " + std::to_string(*k)});
    ReductionCertificate c;
    c.indices = t;
    c.forms = std::move(forms);
    c.b_gens = apply_forms(c.forms, q);
    c.reduction_k = *k;
    c.sop = true;
    c.claim_passed = true;
    res.certificate = std::move(c);
    break;
  }
  if (candidates.empty())
    res.notes.push_back("no tuple passes the claim check on the computed presentation");
  return res;
}

FormFamily auto_family(const FiberPresentation &fp, std::size_t n,
                       std::vector<std::string> *notes) {
  const std::size_t m = fp.fiber_vars->size();
  std::int64_t d;
  if (fp.all_monomial()) {
    d = degrad(fp).total;
  } else {
    d = quotient_degree(fp.ideal());
    if (notes)
      notes->push_back("presentation is not monomial; family sized with deg k[X]/Q' = " +
                       std::to_string(d) + " in place of deg.rad");
  }
  d = std::max<std::int64_t>(d, 1);
  const unsigned l = ell(static_cast<unsigned>(d), m, n);
  if (fp.field.characteristic() == 2 && l <= m + 1) {
    FormFamily f = f2_family(m);
    if (notes)
      notes->insert(notes->end(), f.notes.begin(), f.notes.end());
    return f;
  }
  return vandermonde_family(fp.field, m, l);
}

CrosscheckResult claim_crosscheck(const LocalIdeal &q, const HomogIdeal &big_q,
                                  const std::vector<LinearForm> &forms, unsigned k_max,
                                  unsigned e_cap) {
  CrosscheckResult r;
  r.claim = claim_holds(big_q, forms);
  LocalIdeal b(q.vars(), q.field(), apply_forms(forms, q));
  r.sop = b.gens().size() >= q.vars()->size() && primary_witness(b, e_cap).has_value();
  if (r.sop)
    r.direct = reduction_number(q, b, {k_max, e_cap});
  return r;
}

std::optional<std::string> verify_certificate(const LocalIdeal &q,
                                              const ReductionCertificate &c,
                                              unsigned k_max, unsigned e_cap) {
  if (c.forms.size() != q.vars()->size())
    return "certificate has " + std::to_string(c.forms.size()) + " forms, expected " +
           std::to_string(q.vars()->size());
  std::vector<Poly> b_gens = apply_forms(c.forms, q);
  if (b_gens.size() != c.b_gens.size() ||
      !std::equal(b_gens.begin(), b_gens.end(), c.b_gens.begin()))
    return std::string("b generators do not match the forms applied to q");
  LocalIdeal b(q.vars(), q.field(), b_gens);
  bool sop = b.gens().size() == q.vars()->size() && primary_witness(b, e_cap).has_value();
  if (sop != c.sop)
    return "sop recomputed as " + std::string(sop ? "true" : "false");
  if (!sop)
    return std::string("b is not m-primary");
  auto k = reduction_number(q, b, {std::max(k_max, c.reduction_k), e_cap});
  if (!k)
    return "b is not a reduction of q up to k = " +
           std::to_string(std::max(k_max, c.reduction_k));
  if (*k != c.reduction_k)
    return "reduction number recomputed as " + std::to_string(*k) + ", certificate says " +
           std::to_string(c.reduction_k);
  return std::nullopt;
}

} // namespace redlocal
