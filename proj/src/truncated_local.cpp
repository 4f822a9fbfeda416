#include "redlocal/truncated_local.hpp"

#include "redlocal/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace redlocal {

using linalg::SparseRow;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i)
    r = r * (n - i) / (i + 1);
  return static_cast<std::uint64_t>(r);
}

namespace {

// Monomials of degree d in k variables.
std::uint64_t count_in(std::size_t k, unsigned d) {
  if (k == 0)
    return d == 0 ? 1 : 0;
  return binomial(d + k - 1, k - 1);
}

} // namespace

std::uint64_t MonomialIndexer::count(unsigned d) const { return count_in(n_, d); }

std::uint64_t MonomialIndexer::below(unsigned d) const {
  if (d == 0)
    return 0;
  if (n_ == 0)
    return 1;
  return binomial(d - 1 + n_, n_);
}

std::uint64_t MonomialIndexer::rank(const Monomial &m) const {
  unsigned rem = m.degree();
  std::uint64_t r = below(rem);
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    unsigned a = m[i];
    if (rem > a) {
      std::size_t k = n_ - i - 1;
      r += binomial(rem - a - 1 + k, k);
    }
    rem -= a;
  }
  return r;
}

Monomial MonomialIndexer::unrank(std::uint64_t col) const {
  unsigned d = 0;
  while (below(d + 1) <= col)
    ++d;
  std::uint64_t r = col - below(d);
  Monomial m(n_);
  unsigned rem = d;
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    unsigned a = rem;
    while (true) {
      std::uint64_t block = count_in(n_ - i - 1, rem - a);
      if (r < block)
        break;
      r -= block;
      --a;
    }
    m.set(i, a);
    rem -= a;
  }
  if (n_ > 0)
    m.set(n_ - 1, rem);
  return m;
}

// LocalIdeal

LocalIdeal::LocalIdeal(VarSetPtr vars, FieldCtx field, std::vector<Poly> gens)
    : vars_(std::move(vars)), field_(field) {
  for (auto &g : gens) {
    if (!same_varset(g.vars(), vars_))
      throw VarSetMismatch("generator over a different variable set");
    if (!(g.field() == field_))
      throw ContextMismatch("generator over a different field");
    if (g.is_zero())
      continue;
    if (g.low_degree() == 0)
      throw InvalidInput("generator " + g.to_string() +
                         " has a nonzero constant term (not in m)");
    gens_.push_back(std::move(g));
  }
}

LocalIdeal LocalIdeal::unit(VarSetPtr vars, FieldCtx field) {
  LocalIdeal u;
  u.vars_ = std::move(vars);
  u.field_ = field;
  u.unit_ = true;
  return u;
}

bool LocalIdeal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Poly &g) { return g.is_monomial(); });
}

unsigned LocalIdeal::max_degree() const {
  int d = 0;
  for (const auto &g : gens_)
    d = std::max(d, g.total_degree());
  return static_cast<unsigned>(d);
}

std::string LocalIdeal::to_string() const {
  if (unit_)
    return "(1)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i)
      s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

// TruncatedSubspace

SparseRow TruncatedSubspace::to_row(const Poly &f) const {
  SparseRow row;
  row.reserve(f.num_terms());
  for (const auto &t : f.terms())
    if (t.mono.degree() < order_)
      row.push_back({index_.rank(t.mono), t.coeff});
  std::sort(row.begin(), row.end(),
            [](const linalg::Entry &a, const linalg::Entry &b) { return a.col < b.col; });
  return row;
}

bool TruncatedSubspace::contains(const Poly &f) const {
  return echelon_.contains(to_row(f));
}

bool TruncatedSubspace::covers_degree(unsigned d) const {
  if (d >= order_)
    return false;
  for (std::uint64_t c = index_.below(d); c < index_.below(d + 1); ++c)
    if (!echelon_.is_pivot(c))
      return false;
  return true;
}

std::uint64_t TruncatedSubspace::standard_count(unsigned d) const {
  std::uint64_t n = 0;
  for (std::uint64_t c = 0; c < index_.below(std::min(d, order_)); ++c)
    if (!echelon_.is_pivot(c))
      ++n;
  return n;
}

bool TruncatedSubspace::is_pivot(const Monomial &m) const {
  return m.degree() < order_ && echelon_.is_pivot(index_.rank(m));
}

std::vector<Poly> TruncatedSubspace::basis_polys(const VarSetPtr &vars) const {
  std::vector<Poly> out;
  for (const auto &row : echelon_.rows()) {
    std::vector<Term> terms;
    for (const auto &e : row)
      terms.push_back({index_.unrank(e.col), e.val});
    out.push_back(Poly::from_terms(vars, echelon_.field(), std::move(terms)));
  }
  return out;
}

bool TruncatedSubspace::same_span(const TruncatedSubspace &o) const {
  if (order_ != o.order_ || index_.nvars() != o.index_.nvars() ||
      dim() != o.dim())
    return false;
  for (const auto &row : o.echelon_.rows())
    if (!echelon_.contains(row))
      return false;
  return true;
}

namespace {

// g == c * x^beta * h for some monomial beta and scalar c.
bool is_monomial_multiple(const Poly &g, const Poly &h) {
  if (g.num_terms() != h.num_terms())
    return false;
  const auto &gl = g.terms().front();
  const auto &hl = h.terms().front();
  if (!hl.mono.divides(gl.mono))
    return false;
  Monomial beta = gl.mono / hl.mono;
  FieldElem c = gl.coeff / hl.coeff;
  for (std::size_t i = 0; i < g.num_terms(); ++i) {
    const auto &gt = g.terms()[i];
    const auto &ht = h.terms()[i];
    if (!(gt.mono == ht.mono * beta) || !(gt.coeff == ht.coeff * c))
      return false;
  }
  return true;
}

TruncatedSubspace build_image(const LocalIdeal &ideal, unsigned order,
                              bool reduce) {
  const std::size_t n = ideal.vars()->size();
  TruncatedSubspace space(order, n, ideal.field());
  auto &ech = space.echelon();
  const auto &idx = space.indexer();
  if (ideal.is_unit()) {
    for (std::uint64_t c = 0; c < idx.below(order); ++c)
      ech.insert({{c, ideal.field().one()}});
    return space;
  }

  std::vector<Monomial> mono_gens;
  std::vector<const Poly *> other;
  for (const auto &g : ideal.gens()) {
    if (g.low_degree() >= static_cast<int>(order))
      continue;
    if (g.is_monomial())
      mono_gens.push_back(g.terms().front().mono);
    else
      other.push_back(&g);
  }

  // Monomial generators span exactly the monomials they divide.
  if (!mono_gens.empty()) {
    for (std::uint64_t c = 0; c < idx.below(order); ++c) {
      Monomial m = idx.unrank(c);
      for (const auto &g : mono_gens) {
        if (g.divides(m)) {
          ech.insert({{c, ideal.field().one()}});
          break;
        }
      }
    }
  }

  // Generators that are monomial multiples of another contribute no new
  // rows.
  std::vector<const Poly *> kept;
  for (std::size_t i = 0; i < other.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < other.size() && !redundant; ++j) {
      if (i == j)
        continue;
      if (is_monomial_multiple(*other[i], *other[j]) &&
          (!is_monomial_multiple(*other[j], *other[i]) || j < i))
        redundant = true;
    }
    if (!redundant)
      kept.push_back(other[i]);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Poly *a, const Poly *b) {
    return a->low_degree() < b->low_degree();
  });

  // Multipliers in increasing degree, so low-order rows enter first.
  unsigned max_mult = 0;
  for (const Poly *g : kept)
    max_mult = std::max(max_mult, order - 1 - static_cast<unsigned>(g->low_degree()));
  const FieldElem one = ideal.field().one();
  for (unsigned t = 0; t <= max_mult && !kept.empty(); ++t) {
    for (const Poly *g : kept) {
      if (static_cast<unsigned>(g->low_degree()) + t >= order)
        continue;
      for (std::uint64_t c = idx.below(t); c < idx.below(t + 1); ++c) {
        Monomial alpha = idx.unrank(c);
        SparseRow row;
        row.reserve(g->num_terms());
        for (const auto &term : g->terms()) {
          Monomial m = term.mono * alpha;
          if (m.degree() < order)
            row.push_back({idx.rank(m), term.coeff});
        }
        std::sort(row.begin(), row.end(),
                  [](const linalg::Entry &a, const linalg::Entry &b) {
                    return a.col < b.col;
                  });
        ech.insert(std::move(row));
      }
    }
  }
  if (reduce)
    ech.make_reduced();
  return space;
}

} // namespace

TruncatedSubspace ideal_image(const LocalIdeal &ideal, unsigned order) {
  if (order == 0)
    throw InvalidInput("truncation order must be at least 1");
  return build_image(ideal, order, true);
}

bool contains_m_power(const LocalIdeal &ideal, unsigned order) {
  if (order == 0)
    throw InvalidInput("truncation order must be at least 1");
  return build_image(ideal, order + 1, false).covers_degree(order);
}

std::optional<LocalIdealOracle>
LocalIdealOracle::build(const LocalIdeal &ideal, const TruncationPolicy &policy) {
  if (ideal.is_unit()) {
    return LocalIdealOracle(build_image(ideal, 1, false), PrimaryWitness{0, 0});
  }
  if (ideal.gens().empty())
    return std::nullopt;
  const unsigned cap = std::max(1u, policy.e_cap);
  unsigned e = std::max(2u, ideal.max_degree() + 1);
  while (true) {
    if (policy.known_order > 0 && e >= policy.known_order)
      e = policy.known_order;
    else if (policy.known_order == 0)
      e = std::min(e, cap);
    TruncatedSubspace space = build_image(ideal, e + 1, false);
    if (space.covers_degree(e)) {
      unsigned e_star = 1;
      while (!space.covers_degree(e_star))
        ++e_star;
      PrimaryWitness w{e_star, space.standard_count(e_star)};
      return LocalIdealOracle(std::move(space), w);
    }
    if (e == (policy.known_order > 0 ? policy.known_order : cap))
      return std::nullopt;
    e *= 2;
  }
}

bool LocalIdealOracle::member(const Poly &f) const {
  return space_.contains(f);
}

std::optional<PrimaryWitness> primary_witness(const LocalIdeal &ideal,
                                              unsigned e_max) {
  auto oracle = LocalIdealOracle::build(ideal, {e_max, 0});
  if (!oracle)
    return std::nullopt;
  return oracle->witness();
}

bool ideal_member(const Poly &f, const LocalIdeal &ideal, unsigned e_cap) {
  auto oracle = LocalIdealOracle::build(ideal, {e_cap, 0});
  if (!oracle)
    throw NotPrimary("ideal " + ideal.to_string() +
                     " has no m-power witness up to order " +
                     std::to_string(e_cap));
  return oracle->member(f);
}

namespace {

struct PolyHash {
  std::size_t operator()(const Poly &p) const {
    std::size_t h = p.num_terms();
    for (const auto &t : p.terms())
      h = (h * 31 + t.mono.hash()) ^ (t.coeff.hash() << 1);
    return h;
  }
};

} // namespace

LocalIdeal ideal_product(const LocalIdeal &a, const LocalIdeal &b) {
  if (!same_varset(a.vars(), b.vars()))
    throw VarSetMismatch("ideals over different variable sets");
  if (!(a.field() == b.field()))
    throw ContextMismatch("ideals over different fields");
  if (a.is_unit())
    return b;
  if (b.is_unit())
    return a;
  std::vector<Poly> gens;
  std::unordered_set<Poly, PolyHash> seen;
  for (const auto &f : a.gens())
    for (const auto &g : b.gens()) {
      Poly p = f * g;
      if (seen.insert(p).second)
        gens.push_back(std::move(p));
    }
  return LocalIdeal(a.vars(), a.field(), std::move(gens));
}

LocalIdeal ideal_power(const LocalIdeal &a, unsigned k) {
  LocalIdeal r = LocalIdeal::unit(a.vars(), a.field());
  for (unsigned i = 0; i < k; ++i)
    r = ideal_product(r, a);
  return r;
}

std::optional<unsigned> reduction_number(const LocalIdeal &q,
                                         const LocalIdeal &b,
                                         const ReductionOptions &opts) {
  auto q_oracle = LocalIdealOracle::build(q, {opts.e_cap, 0});
  if (!q_oracle)
    throw NotPrimary("q = " + q.to_string() + " has no m-power witness up to order " +
                     std::to_string(opts.e_cap));
  for (const auto &g : b.gens())
    if (!q_oracle->member(g))
      throw NotContained("generator " + g.to_string() + " of b is not in q");
  auto b_oracle = LocalIdealOracle::build(b, {opts.e_cap, 0});
  if (!b_oracle)
    throw NotPrimary("b = " + b.to_string() + " has no m-power witness up to order " +
                     std::to_string(opts.e_cap));

  // k = 0: q = b.
  if (std::all_of(q.gens().begin(), q.gens().end(),
                  [&](const Poly &g) { return b_oracle->member(g); }))
    return 0u;

  const unsigned eq = q_oracle->witness().e_star;
  const unsigned eb = b_oracle->witness().e_star;
  LocalIdeal q_pow = q;  // q^k
  for (unsigned k = 1; k <= opts.k_max; ++k) {
    LocalIdeal next = ideal_product(q_pow, q);  // q^{k+1}
    LocalIdeal bqk = ideal_product(b, q_pow);
    auto oracle = LocalIdealOracle::build(bqk, {opts.e_cap, eb + k * eq});
    if (!oracle)
      throw NotPrimary("b q^" + std::to_string(k) +
                       " exceeds the truncation cap " + std::to_string(opts.e_cap));
    bool all = std::all_of(next.gens().begin(), next.gens().end(),
                           [&](const Poly &g) { return oracle->member(g); });
    if (all)
      return k;
    q_pow = std::move(next);
  }
  return std::nullopt;
}

} // namespace redlocal
