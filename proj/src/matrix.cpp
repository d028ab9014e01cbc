#include "wdec/matrix.hpp"

#include <algorithm>

#include "wdec/echelon.hpp"
#include "wdec/error.hpp"

namespace wdec {

MatrixQ MatrixQ::identity(std::size_t n) {
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  MatrixQ m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::input, "MatrixQ::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

MatrixQ MatrixQ::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  MatrixQ m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorKind::input, "MatrixQ::from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec MatrixQ::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec MatrixQ::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vec> MatrixQ::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

MatrixQ MatrixQ::transpose() const {
  MatrixQ t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec MatrixQ::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::input, "MatrixQ::apply: dimension mismatch");
  Vec out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& a = (*this)(i, j);
      if (sgn(a) != 0) out[i] += a * v[j];
    }
  }
  return out;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::input, "MatrixQ product: dimension mismatch");
  MatrixQ c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) != 0) c(i, j) += x * y;
      }
    }
  }
  return c;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::input, "MatrixQ sum: shape mismatch");
  MatrixQ c = a;
  for (std::size_t t = 0; t < c.data_.size(); ++t) c.data_[t] += b.data_[t];
  return c;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::input, "MatrixQ difference: shape mismatch");
  MatrixQ c = a;
  for (std::size_t t = 0; t < c.data_.size(); ++t) c.data_[t] -= b.data_[t];
  return c;
}

bool MatrixQ::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RcfResult rcf(const MatrixQ& m) {
  RowEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  RcfResult r{MatrixQ(m.rows(), m.cols()), ech.pivots()};
  auto rows = ech.canonical_sparse_rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t t = 0; t < rows[i].idx.size(); ++t) r.form(i, rows[i].idx[t]) = rows[i].val[t];
  }
  return r;
}

std::size_t rank(const MatrixQ& m) {
  RowEchelon ech(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.insert(m.row(i));
  return ech.rank();
}

std::vector<Vec> nullspace_basis(const RcfResult& r) {
  const std::size_t n = r.form.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const Rational& a = r.form(i, f);
      if (sgn(a) != 0) v[r.pivots[i]] = -a;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> nullspace_basis(const MatrixQ& m) { return nullspace_basis(rcf(m)); }

std::optional<Solution> solve(const MatrixQ& a, const Vec& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::input, "solve: a.rows != length(b)");
  const std::size_t n = a.cols();
  MatrixQ aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  RcfResult r = rcf(aug);
  if (!r.pivots.empty() && r.pivots.back() == n) return std::nullopt;

  Solution s;
  s.particular.assign(n, Rational(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) s.particular[r.pivots[i]] = r.form(i, n);

  RcfResult coef{MatrixQ(r.pivots.size(), n), r.pivots};
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) coef.form(i, j) = r.form(i, j);
  s.homogeneous = nullspace_basis(coef);
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) s.free_columns.push_back(j);
  return s;
}

MatrixQ invert(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::input, "invert: matrix is not square");
  const std::size_t n = m.rows();
  RowEchelon ech(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(m(i, j)) != 0) {
        row.idx.push_back(j);
        row.val.push_back(m(i, j));
      }
    }
    row.idx.push_back(n + i);
    row.val.push_back(Rational(1));
    ech.insert(row);
  }
  auto piv = ech.pivots();
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) {
    throw Error(ErrorKind::singular, "invert: matrix is singular");
  }
  MatrixQ inv(n, n);
  auto rows = ech.canonical_sparse_rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < rows[i].idx.size(); ++t) {
      if (rows[i].idx[t] >= n) inv(i, rows[i].idx[t] - n) = rows[i].val[t];
    }
  }
  return inv;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim) {
  RowEchelon ech(dim);
  for (const auto& v : vectors) ech.insert(v);
  return ech.canonical_rows();
}

std::vector<Vec> trailing_canonical_basis(const std::vector<Vec>& basis, std::size_t dim) {
  std::vector<Vec> reversed;
  reversed.reserve(basis.size());
  for (const auto& v : basis) reversed.emplace_back(v.rbegin(), v.rend());
  std::vector<Vec> rows = span_basis(reversed, dim);
  std::vector<Vec> out;
  out.reserve(rows.size());
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.emplace_back(it->rbegin(), it->rend());
  return out;
}

}  // namespace wdec
