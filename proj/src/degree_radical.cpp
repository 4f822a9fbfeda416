#include "redlocal/degree_radical.hpp"

#include "redlocal/errors.hpp"

#include <algorithm>
#include <bit>

namespace redlocal {

namespace {

using Mask = std::uint32_t;

Mask support_mask(const Monomial &m) {
  Mask s = 0;
  for (std::size_t i : m.support())
    s |= Mask{1} << i;
  return s;
}

// Removes every set that strictly contains another one.
void keep_minimal(std::vector<Mask> &sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets)
    if (std::none_of(out.begin(), out.end(), [&](Mask t) { return (t & s) == t; }))
      out.push_back(s);
  sets = std::move(out);
}

// Minimal transversals, one edge at a time.
std::vector<Mask> minimal_covers(const std::vector<Mask> &edges) {
  std::vector<Mask> covers{0};
  for (Mask e : edges) {
    std::vector<Mask> next;
    for (Mask c : covers) {
      if (c & e) {
        next.push_back(c);
        continue;
      }
      for (Mask v = e; v; v &= v - 1)
        next.push_back(c | (v & -v));
    }
    keep_minimal(next);
    covers = std::move(next);
  }
  return covers;
}

std::vector<Mask> prime_masks(const MonomialIdeal &m) {
  std::vector<Mask> edges;
  for (const auto &g : m.min_gens())
    edges.push_back(support_mask(g));
  return minimal_covers(edges);
}

CoordinatePrime from_mask(Mask s) {
  CoordinatePrime p;
  for (std::size_t i = 0; s; ++i, s >>= 1)
    if (s & 1)
      p.vars.push_back(i);
  return p;
}

std::vector<CoordinatePrime> sorted_primes(const std::vector<Mask> &masks) {
  std::vector<CoordinatePrime> out;
  for (Mask s : masks)
    out.push_back(from_mask(s));
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.vars < b.vars;
  });
  return out;
}

} // namespace

std::string CoordinatePrime::to_string(const VarSet &names) const {
  if (vars.empty())
    return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i)
      s += ", ";
    s += names.names.at(vars[i]);
  }
  return s + ")";
}

std::vector<CoordinatePrime> monomial_minimal_primes(const MonomialIdeal &m) {
  for (const auto &g : m.min_gens())
    if (g.is_one())
      throw InvalidInput("the unit ideal has no minimal primes");
  return sorted_primes(prime_masks(m));
}

std::string to_string(DegRadSource s) {
  return s == DegRadSource::MonomialExact ? "MonomialExact" : "UserDecomposition";
}

DegRadReport degrad(const MonomialIdeal &m, const VarSet &names) {
  DegRadReport r;
  r.source = DegRadSource::MonomialExact;
  for (const auto &p : monomial_minimal_primes(m))
    r.primes.push_back({p.to_string(names), 1});
  r.total = static_cast<std::int64_t>(r.primes.size());
  return r;
}

DegRadReport degrad(const FiberPresentation &fp) {
  std::vector<Monomial> monos;
  for (const auto &g : fp.gens()) {
    if (!g.is_monomial())
      throw NotMonomial("generator " + g.to_string() +
                        " is not a monomial; supply a prime decomposition");
    monos.push_back(g.terms().front().mono);
  }
  return degrad(MonomialIdeal(fp.fiber_vars->size(), std::move(monos)),
                *fp.fiber_vars);
}

DegRadReport degrad_from_decomposition(const HomogIdeal &q,
                                       const std::vector<HomogIdeal> &primes) {
  if (primes.empty())
    throw InvalidInput("empty prime decomposition");
  const int dim_q = krull_dimension(q);
  int min_dim = -1;
  DegRadReport r;
  r.source = DegRadSource::UserDecomposition;
  for (const auto &p : primes) {
    if (!same_varset(p.vars(), q.vars()))
      throw VarSetMismatch("prime " + p.to_string() + " uses other variables");
    GroebnerBasis gb = buchberger(p);
    for (const auto &g : q.gens())
      if (!normal_form(g, gb).is_zero())
        throw ContainmentFailure("generator " + g.to_string() +
                                 " of Q is not in " + p.to_string());
    int d = krull_dimension(p);
    min_dim = min_dim < 0 ? d : std::min(min_dim, d);
    std::int64_t deg = quotient_degree(p);
    r.primes.push_back({p.to_string(), deg});
    r.total += deg;
  }
  if (min_dim != dim_q)
    throw DimensionMismatch("smallest prime dimension " + std::to_string(min_dim) +
                            " differs from dim Q = " + std::to_string(dim_q));
  return r;
}

MonotonicityResult monotonicity_check(const MonomialIdeal &q, std::size_t j) {
  if (j >= q.nvars())
    throw InvalidInput("variable index out of range");
  MonotonicityResult r;
  r.before = static_cast<std::int64_t>(prime_masks(q).size());
  // Setting X_j = 0 kills the generators it divides.
  std::vector<Monomial> rest;
  for (const auto &g : q.min_gens())
    if (g[j] == 0)
      rest.push_back(g);
  MonomialIdeal restricted(q.nvars(), std::move(rest));
  r.after = static_cast<std::int64_t>(prime_masks(restricted).size());
  return r;
}

bool monomial_prime_union_check(const MonomialIdeal &i, const Monomial &a) {
  std::vector<Mask> lhs = prime_masks(i.plus(a));
  std::vector<Mask> rhs;
  const Mask edge = support_mask(a);
  for (Mask p : prime_masks(i)) {
    // Minimal primes of P + (a).
    if (p & edge)
      rhs.push_back(p);
    else
      for (Mask v = edge; v; v &= v - 1)
        rhs.push_back(p | (v & -v));
  }
  keep_minimal(rhs);
  keep_minimal(lhs);
  return lhs == rhs;
}

} // namespace redlocal
