#pragma once

#include "redlocal/groebner.hpp"
#include "redlocal/truncated_local.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using namespace redlocal;

// Minimal coordinate primes by trying all 2^m variable subsets.
inline std::vector<std::vector<std::size_t>> minimal_primes(const MonomialIdeal &m) {
  const std::size_t n = m.nvars();
  auto covers = [&](std::uint32_t s) {
    for (const auto &g : m.min_gens()) {
      bool hit = false;
      for (std::size_t i = 0; i < n; ++i)
        if ((s >> i & 1) && g[i] > 0)
          hit = true;
      if (!hit)
        return false;
    }
    return true;
  };
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (!covers(s))
      continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i & 1) && covers(s & ~(1u << i)))
        minimal = false;
    if (!minimal)
      continue;
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1)
        v.push_back(i);
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Monomials x^i y^j outside a monomial ideal of k[[x,y]].
inline std::uint64_t staircase_colength(const std::vector<Monomial> &gens) {
  unsigned a = 0, b = 0;
  for (const auto &g : gens) {
    if (g[1] == 0)
      a = a ? std::min(a, g[0]) : g[0];
    if (g[0] == 0)
      b = b ? std::min(b, g[1]) : g[1];
  }
  std::uint64_t count = 0;
  for (unsigned i = 0; i < a; ++i)
    for (unsigned j = 0; j < b; ++j) {
      Monomial m{i, j};
      bool inside = false;
      for (const auto &g : gens)
        inside = inside || g.divides(m);
      count += inside ? 0 : 1;
    }
  return count;
}

inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial cur(n);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      cur.set(i, left);
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur.set(i, e);
      rec(i + 1, left - e);
    }
  };
  if (n == 0)
    return out;
  rec(0, d);
  return out;
}

// dim_k (k[X]/M)_d by counting.
inline std::int64_t monomial_hilbert(const MonomialIdeal &m, unsigned d) {
  std::int64_t c = 0;
  for (const auto &mono : monomials_of_degree(m.nvars(), d))
    c += m.contains(mono) ? 0 : 1;
  return c;
}

// Rank by textbook dense Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<FieldElem>> rows) {
  std::size_t rank = 0;
  if (rows.empty())
    return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero())
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[p], rows[rank]);
    FieldElem inv = rows[rank][c].inv();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero())
        continue;
      FieldElem f = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// dim_k (k[X]/I)_d from the rank of all degree-d multiples of generators.
inline std::int64_t dense_hilbert(const HomogIdeal &ideal, unsigned d) {
  const std::size_t n = ideal.nvars();
  auto monos = monomials_of_degree(n, d);
  std::map<std::vector<unsigned>, std::size_t> col;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    std::vector<unsigned> key;
    for (std::size_t j = 0; j < n; ++j)
      key.push_back(monos[i][j]);
    col[key] = i;
  }
  std::vector<std::vector<FieldElem>> rows;
  for (const auto &g : ideal.gens()) {
    int gd = g.total_degree();
    if (gd > static_cast<int>(d))
      continue;
    for (const auto &mult : monomials_of_degree(n, d - gd)) {
      std::vector<FieldElem> row(monos.size(), ideal.field().zero());
      for (const auto &t : g.terms()) {
        Monomial p = t.mono * mult;
        std::vector<unsigned> key;
        for (std::size_t j = 0; j < n; ++j)
          key.push_back(p[j]);
        row[col.at(key)] = t.coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(monos.size() - dense_rank(std::move(rows)));
}

// For monomial q: number of independent degree-k null-forms, i.e. fiber
// monomials minus the distinct images u^a that stay outside m q^k.
inline std::size_t monomial_nullform_count(const std::vector<Monomial> &q, unsigned k) {
  const std::size_t m = q.size();
  const std::size_t n = q.front().size();
  std::vector<Monomial> qk{Monomial(n)};
  for (unsigned t = 0; t < k; ++t) {
    std::vector<Monomial> next;
    for (const auto &a : qk)
      for (const auto &g : q)
        next.push_back(a * g);
    qk = std::move(next);
  }
  auto in_mqk = [&](const Monomial &u) {
    for (const auto &w : qk)
      if (w.divides(u) && !(w == u))
        return true;
    return false;
  };
  auto fiber = monomials_of_degree(m, k);
  std::set<std::vector<unsigned>> images;
  for (const auto &alpha : fiber) {
    Monomial u(n);
    for (std::size_t i = 0; i < m; ++i)
      for (unsigned e = 0; e < alpha[i]; ++e)
        u = u * q[i];
    if (in_mqk(u))
      continue;
    std::vector<unsigned> key;
    for (std::size_t j = 0; j < n; ++j)
      key.push_back(u[j]);
    images.insert(key);
  }
  return fiber.size() - images.size();
}

} // namespace oracle
