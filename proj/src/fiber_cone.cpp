#include "redlocal/fiber_cone.hpp"

#include "redlocal/errors.hpp"

#include <algorithm>
#include <map>

namespace redlocal {

VarSetPtr default_fiber_vars(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i)
    names.push_back("X" + std::to_string(i));
  return make_varset(std::move(names), VarRole::FiberVars);
}

std::vector<Poly> FiberPresentation::gens() const {
  std::vector<Poly> out;
  for (const auto &level : gens_by_degree)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

HomogIdeal FiberPresentation::ideal() const {
  return HomogIdeal(fiber_vars, field, gens());
}

bool FiberPresentation::all_monomial() const {
  for (const auto &level : gens_by_degree)
    for (const auto &g : level)
      if (!g.is_monomial())
        return false;
  return true;
}

namespace {

// Fiber monomials of degree k, GrevLex-descending.
std::vector<Monomial> fiber_monomials(std::size_t m, unsigned k) {
  MonomialIndexer idx(m);
  std::vector<Monomial> out;
  for (std::uint64_t c = idx.below(k); c < idx.below(k + 1); ++c)
    out.push_back(idx.unrank(c));
  std::sort(out.begin(), out.end(), [](const Monomial &a, const Monomial &b) {
    return monomial_cmp(MonomialOrder::GrevLex, a, b) > 0;
  });
  return out;
}

LocalIdeal maximal_ideal(const VarSetPtr &vars, FieldCtx field) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < vars->size(); ++i)
    gens.push_back(Poly::variable(vars, field, i));
  return LocalIdeal(vars, field, std::move(gens));
}

class NullformSolver {
public:
  NullformSolver(const LocalIdeal &q, const VarSetPtr &fiber_vars, unsigned e_cap)
      : q_(q), fiber_vars_(fiber_vars), e_cap_(e_cap) {
    if (fiber_vars->size() != q.gens().size())
      throw LengthMismatch("need one fiber variable per generator of q");
    auto oracle = LocalIdealOracle::build(q, {e_cap, 0});
    if (!oracle)
      throw NotPrimary("q = " + q.to_string() +
                       " has no m-power witness up to order " + std::to_string(e_cap));
    e_q_ = oracle->witness().e_star;
  }

  std::vector<Poly> solve(unsigned k) {
    const FieldCtx field = q_.field();
    const std::size_t m = q_.gens().size();
    LocalIdeal qk = ideal_power(q_, k);
    LocalIdeal mqk = ideal_product(maximal_ideal(q_.vars(), field), qk);
    // m^{E_q} ⊆ q gives m^{k E_q + 1} ⊆ m q^k.
    auto oracle = LocalIdealOracle::build(mqk, {e_cap_, k * e_q_ + 1});
    if (!oracle)
      throw NotPrimary("m q^" + std::to_string(k) + " has no witness");
    const TruncatedSubspace &space = oracle->subspace();
    const unsigned order = space.order();
    const std::uint64_t tag0 = space.ambient_dim();

    std::vector<Monomial> monos = fiber_monomials(m, k);
    std::map<std::vector<unsigned>, Poly> powers;
    linalg::Echelon ech(field);
    for (std::size_t t = 0; t < monos.size(); ++t) {
      Poly img = evaluate(monos[t], order, powers);
      linalg::SparseRow row = space.echelon().reduce(space.to_row(img));
      row.push_back({tag0 + t, field.one()});
      ech.insert(std::move(row));
    }
    // Rows whose pivot is a tag have zero image: they span the kernel.
    linalg::Echelon kernel(field);
    for (const auto &row : ech.rows()) {
      if (row.front().col < tag0)
        continue;
      linalg::SparseRow tags;
      for (const auto &e : row)
        tags.push_back({e.col - tag0, e.val});
      kernel.insert(std::move(tags));
    }
    kernel.make_reduced();
    std::vector<Poly> out;
    for (const auto &row : kernel.rows()) {
      std::vector<Term> terms;
      for (const auto &e : row)
        terms.push_back({monos[e.col], e.val});
      out.push_back(Poly::from_terms(fiber_vars_, field, std::move(terms)));
    }
    return out;
  }

private:
  // u^alpha mod m^order, memoized per call.
  Poly evaluate(const Monomial &alpha, unsigned order,
                std::map<std::vector<unsigned>, Poly> &memo) const {
    std::vector<unsigned> key(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
      key[i] = alpha[i];
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
    Poly result = Poly::constant(q_.vars(), q_.field().one());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0)
        continue;
      Monomial rest = alpha;
      rest.set(i, alpha[i] - 1);
      result = evaluate(rest, order, memo).mul_truncated(q_.gens()[i], order);
      break;
    }
    memo.emplace(std::move(key), result);
    return result;
  }

  const LocalIdeal &q_;
  VarSetPtr fiber_vars_;
  unsigned e_cap_;
  unsigned e_q_ = 0;
};

} // namespace

std::vector<Poly> nullforms_at_degree(const LocalIdeal &q, unsigned k,
                                      const VarSetPtr &fiber_vars, unsigned e_cap) {
  if (k == 0)
    throw InvalidInput("null-form degree must be at least 1");
  return NullformSolver(q, fiber_vars, e_cap).solve(k);
}

unsigned default_dmax(const LocalIdeal &q) { return 2 * q.max_degree() + 2; }

FiberPresentation fiber_presentation(const LocalIdeal &q, unsigned d_max,
                                     const VarSetPtr &fiber_vars, unsigned e_cap) {
  NullformSolver solver(q, fiber_vars, e_cap);
  FiberPresentation fp;
  fp.fiber_vars = fiber_vars;
  fp.field = q.field();
  fp.d_max = d_max;
  fp.gens_by_degree.resize(d_max + 1);
  std::vector<Poly> found;
  std::optional<GroebnerBasis> gb;
  for (unsigned k = 1; k <= d_max; ++k) {
    for (const Poly &form : solver.solve(k)) {
      Poly r = gb ? normal_form(form, *gb) : form;
      if (r.is_zero())
        continue;
      r = r.monic();
      found.push_back(r);
      fp.gens_by_degree[k].push_back(r);
      gb = buchberger(HomogIdeal(fiber_vars, q.field(), found));
    }
  }
  fp.stabilized = d_max >= 2 && fp.gens_by_degree[d_max].empty() &&
                  fp.gens_by_degree[d_max - 1].empty();
  fp.dim_check = krull_dimension(fp.ideal());
  return fp;
}

} // namespace redlocal
