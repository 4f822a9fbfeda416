#include "redlocal/groebner.hpp"

#include "redlocal/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace redlocal {

HomogIdeal::HomogIdeal(VarSetPtr vars, FieldCtx field, std::vector<Poly> gens)
    : vars_(std::move(vars)), field_(field) {
  for (auto &g : gens) {
    if (!same_varset(g.vars(), vars_))
      throw VarSetMismatch("generator over a different variable set");
    if (!(g.field() == field_))
      throw ContextMismatch("generator over a different field");
    if (g.is_zero())
      continue;
    if (!g.is_homogeneous())
      throw NotHomogeneous("generator " + g.to_string() + " is not homogeneous");
    gens_.push_back(std::move(g));
  }
}

HomogIdeal HomogIdeal::plus(const std::vector<Poly> &more) const {
  std::vector<Poly> g = gens_;
  g.insert(g.end(), more.begin(), more.end());
  return HomogIdeal(vars_, field_, std::move(g));
}

std::string HomogIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i)
      s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

// MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens)
    : nvars_(nvars) {
  std::sort(gens.begin(), gens.end(), [](const Monomial &a, const Monomial &b) {
    return monomial_cmp(MonomialOrder::GrevLex, a, b) < 0;
  });
  // Ascending order: a divisor always precedes its multiples.
  for (const auto &g : gens) {
    if (g.size() != nvars)
      throw LengthMismatch("monomial generator has wrong length");
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial &h) { return h.divides(g); });
    if (!redundant)
      gens_.push_back(g);
  }
  std::reverse(gens_.begin(), gens_.end());
}

bool MonomialIdeal::contains(const Monomial &m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial &g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::plus(const Monomial &m) const {
  auto g = gens_;
  g.push_back(m);
  return MonomialIdeal(nvars_, std::move(g));
}

MonomialIdeal MonomialIdeal::colon(const Monomial &m) const {
  std::vector<Monomial> g;
  g.reserve(gens_.size());
  for (const auto &h : gens_)
    g.push_back(h.colon(m));
  return MonomialIdeal(nvars_, std::move(g));
}

std::string MonomialIdeal::to_string(const VarSet &vars) const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i)
      s += ", ";
    s += gens_[i].to_string(vars);
  }
  return s + ")";
}

// Buchberger

namespace {

struct OrderedPoly {
  Poly poly;
  Monomial lm;
  FieldElem lc;
};

OrderedPoly with_lead(Poly p, MonomialOrder order) {
  const Term &t = p.lead(order);
  Monomial lm = t.mono;
  FieldElem lc = t.coeff;
  return {std::move(p), lm, lc};
}

// Full reduction of f by divisors (leading data precomputed).
Poly reduce_by(const Poly &f, const std::vector<OrderedPoly> &divs,
               MonomialOrder order) {
  Poly p = f;
  std::vector<Term> rem;
  while (!p.is_zero()) {
    const Term &lt = p.lead(order);
    const OrderedPoly *d = nullptr;
    for (const auto &g : divs)
      if (g.lm.divides(lt.mono)) {
        d = &g;
        break;
      }
    if (d) {
      FieldElem c = lt.coeff / d->lc;
      p = p - d->poly.mul_term(lt.mono / d->lm, c);
    } else {
      rem.push_back(lt);
      p = p - Poly::monomial(p.vars(), lt.mono, lt.coeff);
    }
  }
  return Poly::from_terms(f.vars(), f.field(), std::move(rem));
}

Poly s_poly(const OrderedPoly &a, const OrderedPoly &b) {
  Monomial l = a.lm.lcm(b.lm);
  return a.poly.mul_term(l / a.lm, a.lc.inv()) -
         b.poly.mul_term(l / b.lm, b.lc.inv());
}

} // namespace

GroebnerBasis buchberger(const HomogIdeal &ideal, MonomialOrder order) {
  GroebnerBasis out{ideal.vars(), ideal.field(), order, {}};
  std::vector<OrderedPoly> g;
  // Pair queue keyed by (lcm degree, lcm, i, j): normal selection strategy.
  struct PairKey {
    unsigned deg;
    std::size_t i, j;
  };
  auto pair_less = [](const PairKey &a, const PairKey &b) {
    if (a.deg != b.deg)
      return a.deg < b.deg;
    if (a.j != b.j)
      return a.j < b.j;
    return a.i < b.i;
  };
  std::set<PairKey, decltype(pair_less)> pending(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> open;  // (min, max) in pending

  auto add = [&](Poly p) {
    p = p.monic(order);
    std::size_t j = g.size();
    g.push_back(with_lead(std::move(p), order));
    for (std::size_t i = 0; i < j; ++i) {
      unsigned d = g[i].lm.lcm(g[j].lm).degree();
      pending.insert({d, i, j});
      open.insert({i, j});
    }
  };

  for (const auto &f : ideal.gens()) {
    Poly r = reduce_by(f, g, order);
    if (!r.is_zero())
      add(std::move(r));
  }

  while (!pending.empty()) {
    PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    open.erase({pk.i, pk.j});
    const auto &a = g[pk.i];
    const auto &b = g[pk.j];
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if (a.lm.gcd(b.lm).is_one())
      continue;
    // Chain criterion.
    Monomial l = a.lm.lcm(b.lm);
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j || !g[k].lm.divides(l))
        continue;
      auto key = [](std::size_t x, std::size_t y) {
        return std::make_pair(std::min(x, y), std::max(x, y));
      };
      if (!open.contains(key(pk.i, k)) && !open.contains(key(pk.j, k)))
        skip = true;
    }
    if (skip)
      continue;
    Poly r = reduce_by(s_poly(a, b), g, order);
    if (!r.is_zero())
      add(std::move(r));
  }

  // Minimalize, then inter-reduce.
  std::vector<OrderedPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !g[j].lm.divides(g[i].lm))
        continue;
      redundant = !(g[j].lm == g[i].lm) || j < i;
    }
    if (!redundant)
      minimal.push_back(g[i]);
  }
  std::vector<OrderedPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OrderedPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i)
        others.push_back(minimal[j]);
    // The leading term cannot be reduced by the others.
    Poly tail = minimal[i].poly - Poly::monomial(ideal.vars(), minimal[i].lm, minimal[i].lc);
    Poly r = Poly::monomial(ideal.vars(), minimal[i].lm, minimal[i].lc) +
             reduce_by(tail, others, order);
    reduced.push_back(with_lead(r.monic(order), order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const OrderedPoly &a, const OrderedPoly &b) {
    return monomial_cmp(order, a.lm, b.lm) > 0;
  });
  for (auto &r : reduced)
    out.basis.push_back(std::move(r.poly));
  return out;
}

Poly normal_form(const Poly &f, const GroebnerBasis &gb) {
  std::vector<OrderedPoly> divs;
  for (const auto &g : gb.basis)
    divs.push_back(with_lead(g, gb.order));
  return reduce_by(f, divs, gb.order);
}

MonomialIdeal leading_ideal(const GroebnerBasis &gb) {
  std::vector<Monomial> lms;
  for (const auto &g : gb.basis)
    lms.push_back(g.lead(gb.order).mono);
  return MonomialIdeal(gb.vars->size(), std::move(lms));
}

// Hilbert series

namespace {

using TPoly = std::vector<std::int64_t>;

TPoly tpoly_add(const TPoly &a, const TPoly &b) {
  TPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] += b[i];
  return r;
}

TPoly tpoly_mul(const TPoly &a, const TPoly &b) {
  TPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

void trim(TPoly &p) {
  while (p.size() > 1 && p.back() == 0)
    p.pop_back();
}

TPoly numerator(const MonomialIdeal &m) {
  const auto &gens = m.min_gens();
  if (gens.empty())
    return {1};
  // Pairwise coprime generators: product of (1 - t^deg).
  std::vector<unsigned> occurrences(m.nvars(), 0);
  bool coprime = true;
  for (const auto &g : gens)
    for (std::size_t v : g.support())
      if (++occurrences[v] > 1)
        coprime = false;
  if (coprime) {
    TPoly r{1};
    for (const auto &g : gens) {
      TPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      r = tpoly_mul(r, f);
    }
    trim(r);
    return r;
  }
  // Pivot on the most frequent shared variable:
  // H(S/I) = H(S/(I + x)) + t H(S/(I : x)).
  std::size_t pivot = 0;
  for (std::size_t v = 0; v < m.nvars(); ++v)
    if (occurrences[v] > occurrences[pivot])
      pivot = v;
  Monomial x(m.nvars());
  x.set(pivot, 1);
  TPoly with = numerator(m.plus(x));
  TPoly colon = numerator(m.colon(x));
  colon.insert(colon.begin(), 0);
  TPoly r = tpoly_add(with, colon);
  trim(r);
  return r;
}

} // namespace

HilbertData hilbert_series_monomial(const MonomialIdeal &m, std::size_t nvars) {
  if (m.nvars() != nvars)
    throw LengthMismatch("monomial ideal has a different variable count");
  HilbertData h;
  h.numerator = numerator(m);
  TPoly p = h.numerator;
  if (p.size() == 1 && p[0] == 0) {
    h.dimension = -1;
    h.degree = 0;
    return h;
  }
  int divisions = 0;
  while (true) {
    std::int64_t at_one = 0;
    for (auto c : p)
      at_one += c;
    if (at_one != 0)
      break;
    // Divide by (1 - t): q_i = sum_{j <= i} p_j.
    TPoly q(p.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      acc += p[i];
      q[i] = acc;
    }
    p = std::move(q);
    ++divisions;
  }
  h.dimension = static_cast<int>(nvars) - divisions;
  h.degree = 0;
  for (auto c : p)
    h.degree += c;
  return h;
}

int krull_dimension(const MonomialIdeal &m) {
  const std::size_t n = m.nvars();
  std::vector<std::uint32_t> masks;
  for (const auto &g : m.min_gens()) {
    std::uint32_t mask = 0;
    for (std::size_t v : g.support())
      mask |= 1u << v;
    masks.push_back(mask);
  }
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = std::none_of(masks.begin(), masks.end(), [&](std::uint32_t g) {
      return (g & ~s) == 0;
    });
    if (independent)
      best = std::max(best, std::popcount(s));
  }
  return best;
}

int krull_dimension(const HomogIdeal &ideal, MonomialOrder order) {
  return krull_dimension(leading_ideal(buchberger(ideal, order)));
}

bool is_zero_dimensional(const HomogIdeal &ideal) {
  return krull_dimension(ideal) == 0;
}

bool same_ideal(const HomogIdeal &a, const HomogIdeal &b) {
  if (!same_varset(a.vars(), b.vars()) || !(a.field() == b.field()))
    return false;
  return buchberger(a).basis == buchberger(b).basis;
}

std::int64_t quotient_degree(const HomogIdeal &ideal) {
  return hilbert_series_monomial(leading_ideal(buchberger(ideal)), ideal.nvars())
      .degree;
}

} // namespace redlocal
