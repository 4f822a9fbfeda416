#include "redlocal/multiplicity.hpp"

#include "redlocal/errors.hpp"

#include <algorithm>
#include <map>

namespace redlocal {

MultiplicityResult hs_multiplicity(const LocalIdeal &ideal, unsigned s_max,
                                   unsigned e_cap) {
  const unsigned n = static_cast<unsigned>(ideal.vars()->size());
  if (s_max < n + 2)
    throw InvalidInput("s_max = " + std::to_string(s_max) + " is below n + 2 = " +
                       std::to_string(n + 2));
  MultiplicityResult r;
  auto base = primary_witness(ideal, e_cap);
  if (!base)
    return r;
  LocalIdeal power = ideal;
  std::vector<std::int64_t> seq;
  for (unsigned s = 1; s <= s_max; ++s) {
    if (s > 1)
      power = ideal_product(power, ideal);
    // m^{E} ⊆ I gives m^{sE} ⊆ I^s.
    auto oracle = LocalIdealOracle::build(power, {e_cap, s * base->e_star});
    if (!oracle)
      throw NotPrimary("no witness for power " + std::to_string(s));
    r.samples.push_back({s, oracle->witness().colength});
    seq.push_back(static_cast<std::int64_t>(oracle->witness().colength));
  }
  for (unsigned i = 0; i < n; ++i) {
    std::vector<std::int64_t> next;
    for (std::size_t j = 0; j + 1 < seq.size(); ++j)
      next.push_back(seq[j + 1] - seq[j]);
    seq = std::move(next);
  }
  r.differences = seq;
  const std::size_t tail = std::min<std::size_t>(3, seq.size());
  if (tail < 2 || !std::all_of(seq.end() - tail, seq.end(),
                               [&](std::int64_t v) { return v == seq.back(); }))
    throw EscalateSamples("n-th differences not constant up to s = " +
                          std::to_string(s_max));
  r.e = seq.back();
  return r;
}

MultiplicityResult hs_multiplicity_auto(const LocalIdeal &ideal, unsigned s_max,
                                        unsigned s_limit, unsigned e_cap) {
  unsigned s = s_max ? s_max : static_cast<unsigned>(ideal.vars()->size()) + 4;
  while (true) {
    try {
      return hs_multiplicity(ideal, s, e_cap);
    } catch (const EscalateSamples &) {
      if (s + 2 > s_limit)
        throw;
      s += 2;
    }
  }
}

std::int64_t newton_multiplicity(const LocalIdeal &ideal) {
  if (ideal.vars()->size() != 2)
    throw InvalidInput("Newton polygon needs exactly two variables");
  if (!ideal.is_monomial())
    throw NotMonomial("ideal " + ideal.to_string() + " is not monomial");
  // Lowest exponent of y for each exponent of x.
  std::map<std::int64_t, std::int64_t> low;
  for (const auto &g : ideal.gens()) {
    const Monomial &m = g.terms().front().mono;
    std::int64_t a = m[0], b = m[1];
    auto it = low.find(a);
    if (it == low.end() || b < it->second)
      low[a] = b;
  }
  if (!low.contains(0))
    throw NotPrimary("no pure power of the second variable");
  std::int64_t x_end = -1;
  for (auto [a, b] : low)
    if (b == 0) {
      x_end = a;
      break;
    }
  if (x_end < 0)
    throw NotPrimary("no pure power of the first variable");

  using Pt = std::pair<std::int64_t, std::int64_t>;
  std::vector<Pt> hull;
  auto cross = [](const Pt &o, const Pt &a, const Pt &b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  for (auto [a, b] : low) {
    if (a > x_end)
      break;
    Pt p{a, b};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  // Shoelace over (0,0), (x_end,0), then the chain back to (0, b0).
  std::vector<Pt> poly{{0, 0}};
  for (auto it = hull.rbegin(); it != hull.rend(); ++it)
    poly.push_back(*it);
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt &p = poly[i], &q = poly[(i + 1) % poly.size()];
    twice += p.first * q.second - q.first * p.second;
  }
  return twice < 0 ? -twice : twice;
}

MinMultiplicityResult min_multiplicity_search(const LocalIdeal &q, const FormFamily &f,
                                              const MultiplicityOptions &opts) {
  const std::size_t n = q.vars()->size();
  MinMultiplicityResult r;
  auto eq = hs_multiplicity_auto(q, opts.s_max, 16, opts.e_cap);
  if (!eq.e)
    throw NotPrimary("q = " + q.to_string() + " is not m-primary");
  r.e_q = *eq.e;

  for (const IndexTuple &t : index_tuples(f.size(), n)) {
    std::vector<LinearForm> forms;
    for (std::size_t i : t)
      forms.push_back(f.forms.at(i - 1));
    LocalIdeal b(q.vars(), q.field(), apply_forms(forms, q));
    MultiplicityRow row{t, std::nullopt};
    if (b.gens().size() == n)
      row.e_b = hs_multiplicity_auto(b, opts.s_max, 16, opts.e_cap).e;
    r.table.push_back(std::move(row));
  }

  std::optional<std::int64_t> best;
  for (const auto &row : r.table)
    if (row.e_b && (!best || *row.e_b < *best))
      best = row.e_b;
  for (const auto &row : r.table) {
    if (!best || row.e_b != best)
      continue;
    r.argmin.push_back(row.tuple);
    bool flag = *row.e_b == r.e_q;
    r.rees_flag.push_back(flag);
    std::optional<unsigned> k;
    if (flag) {
      std::vector<LinearForm> forms;
      for (std::size_t i : row.tuple)
        forms.push_back(f.forms.at(i - 1));
      LocalIdeal b(q.vars(), q.field(), apply_forms(forms, q));
      k = reduction_number(q, b, {opts.k_max, opts.e_cap});
    }
    r.argmin_k.push_back(k);
  }

  SearchOptions so;
  so.d_max = opts.d_max;
  so.k_max = opts.k_max;
  so.e_cap = opts.e_cap;
  so.fiber_vars = opts.fiber_vars;
  if (find_reduction(q, f, so).certificate)
    r.min_matches = best && *best == r.e_q;
  return r;
}

DegreeCheck degree_vs_multiplicity_check(const LocalIdeal &q,
                                         const MultiplicityOptions &opts) {
  VarSetPtr fv = opts.fiber_vars ? opts.fiber_vars : default_fiber_vars(q.gens().size());
  unsigned d_max = opts.d_max ? opts.d_max : default_dmax(q);
  FiberPresentation fp = fiber_presentation(q, d_max, fv, opts.e_cap);
  DegreeCheck c;
  c.stabilized = fp.stabilized;
  c.deg_f = quotient_degree(fp.ideal());
  auto e = hs_multiplicity_auto(q, opts.s_max, 16, opts.e_cap);
  if (!e.e)
    throw NotPrimary("q = " + q.to_string() + " is not m-primary");
  c.e_q = *e.e;
  c.ok = c.deg_f <= c.e_q;
  return c;
}

} // namespace redlocal
