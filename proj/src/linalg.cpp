#include "redlocal/linalg.hpp"

#include <algorithm>

namespace redlocal::linalg {

SparseRow sub_scaled(const SparseRow &row, const FieldElem &factor,
                     const SparseRow &other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto i = row.begin(), j = other.begin();
  while (i != row.end() || j != other.end()) {
    if (j == other.end() || (i != row.end() && i->col < j->col)) {
      out.push_back(*i++);
    } else if (i == row.end() || j->col < i->col) {
      FieldElem v = -factor * j->val;
      out.push_back({j->col, std::move(v)});
      ++j;
    } else {
      FieldElem v = i->val;
      v.sub_mul(factor, j->val);
      if (!v.is_zero())
        out.push_back({i->col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseRow Echelon::head_reduce(SparseRow row) const {
  while (!row.empty()) {
    auto it = pivot_.find(row.front().col);
    if (it == pivot_.end())
      break;
    FieldElem f = row.front().val;
    row = sub_scaled(row, f, rows_[it->second]);
  }
  return row;
}

SparseRow Echelon::reduce(SparseRow row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    auto it = pivot_.find(row[pos].col);
    if (it == pivot_.end()) {
      ++pos;
      continue;
    }
    FieldElem f = row[pos].val;
    // Entries before pos are untouched: pivot rows start at their pivot.
    row = sub_scaled(row, f, rows_[it->second]);
  }
  return row;
}

bool Echelon::insert(SparseRow row) {
  row = head_reduce(std::move(row));
  if (row.empty())
    return false;
  if (!row.front().val.is_one()) {
    FieldElem inv = row.front().val.inv();
    for (auto &e : row)
      e.val *= inv;
  }
  pivot_.emplace(row.front().col, rows_.size());
  rows_.push_back(std::move(row));
  reduced_ = rows_.size() == 1;
  return true;
}

void Echelon::make_reduced() {
  if (reduced_)
    return;
  std::sort(rows_.begin(), rows_.end(), [](const SparseRow &a, const SparseRow &b) {
    return a.front().col < b.front().col;
  });
  pivot_.clear();
  for (std::size_t i = 0; i < rows_.size(); ++i)
    pivot_.emplace(rows_[i].front().col, i);
  // Highest pivot first, so every row used for elimination is already
  // fully reduced.
  for (std::size_t i = rows_.size(); i-- > 0;) {
    SparseRow &r = rows_[i];
    std::size_t pos = 1;
    while (pos < r.size()) {
      auto it = pivot_.find(r[pos].col);
      if (it == pivot_.end()) {
        ++pos;
        continue;
      }
      FieldElem f = r[pos].val;
      r = sub_scaled(r, f, rows_[it->second]);
    }
  }
  reduced_ = true;
}

long Echelon::row_of(std::uint64_t col) const {
  auto it = pivot_.find(col);
  return it == pivot_.end() ? -1 : static_cast<long>(it->second);
}

std::size_t rank(const std::vector<std::vector<FieldElem>> &rows) {
  if (rows.empty())
    return 0;
  Echelon ech(rows.front().front().field());
  for (const auto &r : rows) {
    SparseRow s;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (!r[c].is_zero())
        s.push_back({c, r[c]});
    ech.insert(std::move(s));
  }
  return ech.rank();
}

} // namespace redlocal::linalg
