#include "wdec/center.hpp"

#include "wdec/error.hpp"

namespace wdec {

MatrixQ commutator_matrix(const Algebra& q) {
  const std::size_t r = q.dim();
  MatrixQ m(r * r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const SparseRow& ij = q.product(i, j);
      for (std::size_t t = 0; t < ij.idx.size(); ++t) m(i * r + ij.idx[t], j) += ij.val[t];
      const SparseRow& ji = q.product(j, i);
      for (std::size_t t = 0; t < ji.idx.size(); ++t) m(i * r + ji.idx[t], j) -= ji.val[t];
    }
  return m;
}

std::vector<Vec> center_basis(const Algebra& q) {
  const std::size_t r = q.dim();
  std::vector<Vec> span;
  for (std::size_t j = 0; j < r; ++j) span.push_back(unit_vec(r, j));
  for (std::size_t i = 0; i < r && !span.empty(); ++i) {
    std::vector<Vec> cols;
    cols.reserve(span.size());
    bool all_zero = true;
    for (const auto& v : span) {
      Vec w = left_basis_multiply(q, i, v) - right_basis_multiply(q, v, i);
      if (!is_zero(w)) all_zero = false;
      cols.push_back(std::move(w));
    }
    if (all_zero) continue;
    std::vector<Vec> kernel = nullspace_basis(MatrixQ::from_columns(cols, r));
    std::vector<Vec> next;
    next.reserve(kernel.size());
    for (const auto& c : kernel) {
      Vec v(r);
      for (std::size_t t = 0; t < c.size(); ++t) axpy(v, c[t], span[t]);
      next.push_back(std::move(v));
    }
    span = std::move(next);
  }
  return trailing_canonical_basis(span, r);
}

std::optional<Vec> coordinates_in_basis(const std::vector<Vec>& basis, const Vec& v) {
  const std::size_t c = basis.size();
  const std::size_t r = v.size();
  MatrixQ aug(r, c + 1);
  for (std::size_t k = 0; k < c; ++k) {
    if (basis[k].size() != r) throw Error(ErrorKind::input, "coordinates_in_basis: length mismatch");
    for (std::size_t i = 0; i < r; ++i) aug(i, k) = basis[k][i];
  }
  for (std::size_t i = 0; i < r; ++i) aug(i, c) = v[i];
  RcfResult res = rcf(aug);
  if (!res.pivots.empty() && res.pivots.back() == c) return std::nullopt;
  if (res.rank() < c) throw Error(ErrorKind::input, "coordinates_in_basis: basis is linearly dependent");
  Vec out(c);
  for (std::size_t k = 0; k < c; ++k) out[k] = res.form(k, c);
  return out;
}

Algebra center_structure(const Algebra& q, const std::vector<Vec>& z) {
  const std::size_t c = z.size();
  Algebra f(c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      auto coords = coordinates_in_basis(z, multiply(q, z[i], z[j]));
      if (!coords) {
        throw Error(ErrorKind::not_closed, "center_structure: product z_" + std::to_string(i + 1) + " z_" +
                                               std::to_string(j + 1) + " escapes the span");
      }
      f.set_product(i, j, SparseRow::from_dense(*coords));
    }
  return f;
}

CenterData compute_center(const Algebra& q) {
  CenterData c;
  c.basis = center_basis(q);
  c.structure = center_structure(q, c.basis);
  if (q.one()) {
    c.identity = coordinates_in_basis(c.basis, *q.one());
    if (!c.identity) throw Error(ErrorKind::internal, "identity is not central");
    c.structure.set_one(c.identity);
  }
  return c;
}

}  // namespace wdec
