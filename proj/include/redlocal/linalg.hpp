#pragma once

#include "redlocal/field.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace redlocal::linalg {

struct Entry {
  std::uint64_t col;
  FieldElem val;
};

// Sparse vector with strictly increasing column indices and no zeros.
using SparseRow = std::vector<Entry>;

// row -= factor * other, where both are sorted sparse rows.
SparseRow sub_scaled(const SparseRow &row, const FieldElem &factor,
                     const SparseRow &other);

// Incremental row echelon form over an exact field. The pivot of a row is
// its lowest column; callers order columns so that the entries they want
// eliminated first get the smallest indices. This is the only elimination
// routine in the library: ideal images, kernels and rank tests all go
// through it.
class Echelon {
public:
  explicit Echelon(FieldCtx field) : field_(field) {}

  // Reduces row against the stored pivots; if something survives it is
  // normalized (pivot coefficient 1) and stored. Returns true when the
  // rank grew.
  bool insert(SparseRow row);

  // Eliminates pivot columns from the front of row until its leading
  // column is not a pivot. Empty result iff row lies in the span.
  SparseRow head_reduce(SparseRow row) const;
  // Eliminates every pivot column from row.
  SparseRow reduce(SparseRow row) const;
  bool contains(const SparseRow &row) const { return head_reduce(row).empty(); }

  bool is_pivot(std::uint64_t col) const { return pivot_.contains(col); }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow> &rows() const { return rows_; }
  const FieldCtx &field() const { return field_; }

  // Back-substitution: afterwards every pivot column appears in exactly
  // one row, and rows are sorted by pivot column.
  void make_reduced();
  bool is_reduced() const { return reduced_; }

  // Row index holding the given pivot column, or -1.
  long row_of(std::uint64_t col) const;

private:
  FieldCtx field_;
  std::vector<SparseRow> rows_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_;
  bool reduced_ = true;
};

// Rank of a dense matrix (rows of equal length).
std::size_t rank(const std::vector<std::vector<FieldElem>> &rows);

} // namespace redlocal::linalg
