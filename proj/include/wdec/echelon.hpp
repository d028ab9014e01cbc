#ifndef WDEC_ECHELON_HPP
#define WDEC_ECHELON_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "wdec/rational.hpp"

namespace wdec {

// Sparse row: strictly increasing column indices with nonzero values.
struct SparseRow {
  std::vector<std::size_t> idx;
  Vec val;

  std::size_t nnz() const { return idx.size(); }
  bool empty() const { return idx.empty(); }
  Vec dense(std::size_t cols) const;
  static SparseRow from_dense(const Vec& v);
};

// Incrementally maintained row-echelon basis of a subspace of Q^cols.
//
// Rows are kept in echelon form with a leading 1; the fully reduced form
// (the row canonical form of the span) is produced on demand.  Reduction
// sweeps columns left to right, so the pivot chosen for a new row is always
// its first nonzero column after reduction, which makes the result
// independent of insertion order up to the (unique) RCF.
//
// Not thread-safe: reduction uses an internal dense workspace.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true when v was independent of the current rows (and is now
  // part of the span).
  bool insert(const Vec& v);
  bool insert(const SparseRow& v);

  // Residual of v after elimination against the current rows; zero iff v
  // lies in the span.
  Vec reduce(const Vec& v);
  bool contains(const Vec& v);

  // First column at which the row reduced from the last insert() call was
  // placed; cols() when the last insert was dependent.
  std::size_t last_pivot() const { return last_pivot_; }

  // Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;

  // Rows of the RCF of the span, ordered by pivot.
  std::vector<Vec> canonical_rows() const;
  std::vector<SparseRow> canonical_sparse_rows() const;

 private:
  // Reduces the workspace in place; returns the first surviving column.
  std::size_t sweep(std::size_t from);
  SparseRow harvest(std::size_t from);

  std::size_t cols_;
  std::vector<std::size_t> row_at_;  // column -> row index, or npos
  std::vector<SparseRow> rows_;
  Vec work_;
  std::size_t last_pivot_;
};

}  // namespace wdec

#endif  // WDEC_ECHELON_HPP
