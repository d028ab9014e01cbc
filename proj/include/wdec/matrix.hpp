#ifndef WDEC_MATRIX_HPP
#define WDEC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wdec/rational.hpp"

namespace wdec {

// Dense row-major matrix of exact rationals.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static MatrixQ identity(std::size_t n);
  static MatrixQ from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static MatrixQ from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  std::vector<Vec> row_list() const;

  MatrixQ transpose() const;
  Vec apply(const Vec& v) const;  // this * v

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RcfResult {
  MatrixQ form;                      // same shape as the input; zero rows last
  std::vector<std::size_t> pivots;   // 0-based, increasing

  std::size_t rank() const { return pivots.size(); }
};

RcfResult rcf(const MatrixQ& m);
std::size_t rank(const MatrixQ& m);

// Canonical kernel basis: one vector per free column (in increasing order),
// with that free variable 1 and the other free variables 0.
std::vector<Vec> nullspace_basis(const MatrixQ& m);
std::vector<Vec> nullspace_basis(const RcfResult& r);

struct Solution {
  Vec particular;                     // free variables set to 0
  std::vector<Vec> homogeneous;       // canonical kernel basis of a
  std::vector<std::size_t> free_columns;
};

// std::nullopt when rank([a|b]) > rank(a).
std::optional<Solution> solve(const MatrixQ& a, const Vec& b);

// Throws Error(singular) when m is not invertible.
MatrixQ invert(const MatrixQ& m);

// Nonzero RCF rows of the span of `vectors` (all of length `dim`).
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim);

// Given a basis of a subspace V, returns the unique basis of V that restricts
// to the identity on the "trailing" columns of V (the last nonzero positions
// of an RCF computed right to left), ordered by those columns.  When V is the
// kernel of some matrix this is exactly that matrix's canonical kernel basis,
// so it recovers nullspace_basis() from any basis of the kernel.
std::vector<Vec> trailing_canonical_basis(const std::vector<Vec>& basis, std::size_t dim);

}  // namespace wdec

#endif  // WDEC_MATRIX_HPP
