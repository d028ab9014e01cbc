#include "wdec/algebra.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "wdec/error.hpp"

namespace wdec {

Algebra::Algebra(std::size_t dim) : dim_(dim), table_(dim * dim) {}

void Algebra::set_product(std::size_t i, std::size_t j, SparseRow row) {
  if (i >= dim_ || j >= dim_) throw Error(ErrorKind::input, "structure constant index out of range");
  for (auto k : row.idx) {
    if (k >= dim_) throw Error(ErrorKind::input, "structure constant index out of range");
  }
  table_[i * dim_ + j] = std::move(row);
}

void Algebra::add_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) {
    throw Error(ErrorKind::input, "structure constant index out of range");
  }
  SparseRow& row = table_[i * dim_ + j];
  auto it = std::lower_bound(row.idx.begin(), row.idx.end(), k);
  auto pos = static_cast<std::size_t>(it - row.idx.begin());
  if (it != row.idx.end() && *it == k) {
    row.val[pos] += c;
    if (sgn(row.val[pos]) == 0) {
      row.idx.erase(it);
      row.val.erase(row.val.begin() + static_cast<std::ptrdiff_t>(pos));
    }
  } else if (sgn(c) != 0) {
    row.idx.insert(it, k);
    row.val.insert(row.val.begin() + static_cast<std::ptrdiff_t>(pos), c);
  }
}

void Algebra::set_one(std::optional<Vec> one) {
  if (one && one->size() != dim_) throw Error(ErrorKind::input, "identity vector has wrong length");
  one_ = std::move(one);
}

void Algebra::set_labels(std::optional<std::vector<std::string>> labels) {
  if (labels && labels->size() != dim_) throw Error(ErrorKind::input, "label list has wrong length");
  labels_ = std::move(labels);
}

std::size_t Algebra::nnz() const {
  std::size_t n = 0;
  for (const auto& r : table_) n += r.nnz();
  return n;
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t t = 0; t < a.table_.size(); ++t) {
    if (a.table_[t].idx != b.table_[t].idx || a.table_[t].val != b.table_[t].val) return false;
  }
  return true;
}

Vec basis_element(const Algebra& a, std::size_t i) { return unit_vec(a.dim(), i); }

namespace {

void check_len(const Algebra& a, const Vec& x) {
  if (x.size() != a.dim()) throw Error(ErrorKind::input, "element length does not match algebra dimension");
}

void accumulate(Vec& out, const Rational& s, const SparseRow& row) {
  for (std::size_t t = 0; t < row.idx.size(); ++t) out[row.idx[t]] += s * row.val[t];
}

}  // namespace

Vec multiply(const Algebra& a, const Vec& x, const Vec& y) {
  check_len(a, x);
  check_len(a, y);
  const std::size_t n = a.dim();
  Vec out(n);
  std::vector<std::size_t> ysupp;
  for (std::size_t j = 0; j < n; ++j)
    if (sgn(y[j]) != 0) ysupp.push_back(j);
  Rational s;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (auto j : ysupp) {
      const SparseRow& row = a.product(i, j);
      if (row.empty()) continue;
      s = x[i] * y[j];
      accumulate(out, s, row);
    }
  }
  return out;
}

Vec left_basis_multiply(const Algebra& a, std::size_t i, const Vec& y) {
  check_len(a, y);
  Vec out(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (sgn(y[j]) != 0) accumulate(out, y[j], a.product(i, j));
  }
  return out;
}

Vec right_basis_multiply(const Algebra& a, const Vec& x, std::size_t j) {
  check_len(a, x);
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (sgn(x[i]) != 0) accumulate(out, x[i], a.product(i, j));
  }
  return out;
}

MatrixQ left_mult_matrix(const Algebra& a, const Vec& x) {
  check_len(a, x);
  const std::size_t n = a.dim();
  MatrixQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const SparseRow& row = a.product(i, j);
      for (std::size_t t = 0; t < row.idx.size(); ++t) m(row.idx[t], j) += x[i] * row.val[t];
    }
  }
  return m;
}

MatrixQ right_mult_matrix(const Algebra& a, const Vec& x) {
  check_len(a, x);
  const std::size_t n = a.dim();
  MatrixQ m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const SparseRow& row = a.product(i, j);
      for (std::size_t t = 0; t < row.idx.size(); ++t) m(row.idx[t], i) += x[j] * row.val[t];
    }
  }
  return m;
}

Algebra adjoin_identity(const Algebra& a) {
  const std::size_t n = a.dim();
  Algebra b(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set_product(i, j, a.product(i, j));
  for (std::size_t j = 0; j < n; ++j) {
    b.add_constant(n, j, j, 1);
    b.add_constant(j, n, j, 1);
  }
  b.add_constant(n, n, n, 1);
  b.set_one(unit_vec(n + 1, n));
  if (a.labels()) {
    auto labels = *a.labels();
    labels.push_back("1");
    b.set_labels(labels);
  }
  return b;
}

bool is_identity(const Algebra& a, const Vec& one) {
  check_len(a, one);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec e = basis_element(a, i);
    if (right_basis_multiply(a, one, i) != e) return false;
    if (left_basis_multiply(a, i, one) != e) return false;
  }
  return true;
}

std::optional<Vec> find_identity(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Vec{};
  // Unknown x; equations sum_j c_ji^k x_j = delta_ik and sum_j c_ij^k x_j = delta_ik.
  // An identity is unique when it exists, so the system has rank n exactly
  // when it is consistent; stop as soon as rank n is reached and verify.
  RowEchelon ech(n + 1);
  for (std::size_t i = 0; i < n && ech.rank() < n; ++i) {
    for (int side = 0; side < 2 && ech.rank() < n; ++side) {
      std::vector<SparseRow> rows(n);
      for (std::size_t j = 0; j < n; ++j) {
        const SparseRow& p = side == 0 ? a.product(j, i) : a.product(i, j);
        for (std::size_t t = 0; t < p.idx.size(); ++t) {
          rows[p.idx[t]].idx.push_back(j);
          rows[p.idx[t]].val.push_back(p.val[t]);
        }
      }
      rows[i].idx.push_back(n);
      rows[i].val.push_back(Rational(1));
      for (auto& r : rows) {
        ech.insert(r);
        if (ech.last_pivot() == n) return std::nullopt;
        if (ech.rank() == n) break;
      }
    }
  }
  if (ech.rank() < n) return std::nullopt;
  Vec one(n);
  auto rows = ech.canonical_sparse_rows();
  for (std::size_t p = 0; p < n; ++p) {
    const SparseRow& r = rows[p];
    if (r.idx.back() == n) one[p] = r.val.back();
  }
  if (!is_identity(a, one)) return std::nullopt;
  return one;
}

std::optional<std::array<std::size_t, 3>> find_associativity_violation(const Algebra& a,
                                                                      const AssocOptions& opt) {
  const std::size_t n = a.dim();
  AssocMode mode = opt.mode;
  if (mode == AssocMode::automatic) {
    mode = n <= opt.exhaustive_max_dim ? AssocMode::exhaustive : AssocMode::sampled;
  }
  if (mode == AssocMode::off || n == 0) return std::nullopt;

  auto triple_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
    Vec lhs(n), rhs(n);
    const SparseRow& ij = a.product(i, j);
    for (std::size_t t = 0; t < ij.idx.size(); ++t) accumulate(lhs, ij.val[t], a.product(ij.idx[t], k));
    const SparseRow& jk = a.product(j, k);
    for (std::size_t t = 0; t < jk.idx.size(); ++t) accumulate(rhs, jk.val[t], a.product(i, jk.idx[t]));
    return lhs == rhs;
  };

  if (mode == AssocMode::exhaustive) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!triple_ok(i, j, k)) return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
    if (!triple_ok(i, j, k)) return std::array<std::size_t, 3>{i, j, k};
  }
  return std::nullopt;
}

std::vector<Vec> subspace_closure(const Algebra& a, const std::vector<Vec>& generators, ClosureMode mode) {
  const std::size_t n = a.dim();
  RowEchelon ech(n);
  std::vector<Vec> accepted;  // independent vectors in insertion order
  std::deque<Vec> work;
  auto offer = [&](const Vec& v) {
    if (ech.insert(v)) {
      accepted.push_back(v);
      work.push_back(v);
    }
  };
  for (const auto& g : generators) {
    check_len(a, g);
    offer(g);
  }
  while (!work.empty() && ech.rank() < n) {
    Vec v = std::move(work.front());
    work.pop_front();
    switch (mode) {
      case ClosureMode::left_ideal:
        for (std::size_t i = 0; i < n && ech.rank() < n; ++i) offer(left_basis_multiply(a, i, v));
        break;
      case ClosureMode::right_ideal:
        for (std::size_t i = 0; i < n && ech.rank() < n; ++i) offer(right_basis_multiply(a, v, i));
        break;
      case ClosureMode::two_sided:
        for (std::size_t i = 0; i < n && ech.rank() < n; ++i) {
          offer(left_basis_multiply(a, i, v));
          offer(right_basis_multiply(a, v, i));
        }
        break;
      case ClosureMode::subalgebra: {
        // pair v with every vector accepted so far, including itself
        std::size_t upto = accepted.size();
        for (std::size_t t = 0; t < upto && ech.rank() < n; ++t) {
          offer(multiply(a, v, accepted[t]));
          offer(multiply(a, accepted[t], v));
        }
        break;
      }
    }
  }
  return ech.canonical_rows();
}

Vec ReducedIdealBasis::project(const Vec& x) const {
  if (x.size() != dim) throw Error(ErrorKind::input, "project: length mismatch");
  Vec y(complement.size());
  for (std::size_t k = 0; k < complement.size(); ++k) y[k] = x[complement[k]];
  for (std::size_t h = 0; h < leading.size(); ++h) {
    const Rational& c = x[leading[h]];
    if (sgn(c) == 0) continue;
    axpy(y, -c, sigma[h]);
  }
  return y;
}

SparseRow ReducedIdealBasis::project(const SparseRow& x) const {
  Vec y(complement.size());
  // position of each column in L or M
  for (std::size_t t = 0; t < x.idx.size(); ++t) {
    std::size_t c = x.idx[t];
    auto mit = std::lower_bound(complement.begin(), complement.end(), c);
    if (mit != complement.end() && *mit == c) {
      y[static_cast<std::size_t>(mit - complement.begin())] += x.val[t];
    } else {
      auto lit = std::lower_bound(leading.begin(), leading.end(), c);
      axpy(y, -x.val[t], sigma[static_cast<std::size_t>(lit - leading.begin())]);
    }
  }
  return SparseRow::from_dense(y);
}

Vec ReducedIdealBasis::lift(const Vec& coset_coords) const {
  if (coset_coords.size() != complement.size()) throw Error(ErrorKind::input, "lift: length mismatch");
  Vec x(dim);
  for (std::size_t k = 0; k < complement.size(); ++k) x[complement[k]] = coset_coords[k];
  return x;
}

ReducedIdealBasis reduce_ideal_basis(const std::vector<Vec>& ideal_vectors, std::size_t dim) {
  RowEchelon ech(dim);
  for (const auto& v : ideal_vectors) {
    if (v.size() != dim) throw Error(ErrorKind::input, "ideal vector has wrong length");
    ech.insert(v);
  }
  ReducedIdealBasis r;
  r.dim = dim;
  r.rows = ech.canonical_rows();
  r.leading = ech.pivots();
  std::vector<bool> is_lead(dim, false);
  for (auto l : r.leading) is_lead[l] = true;
  for (std::size_t c = 0; c < dim; ++c)
    if (!is_lead[c]) r.complement.push_back(c);
  r.sigma.assign(r.leading.size(), Vec(r.complement.size()));
  for (std::size_t h = 0; h < r.leading.size(); ++h)
    for (std::size_t k = 0; k < r.complement.size(); ++k) r.sigma[h][k] = r.rows[h][r.complement[k]];
  return r;
}

void check_two_sided_ideal(const Algebra& a, const std::vector<Vec>& ideal_vectors, IdealCheck check,
                           std::uint64_t seed) {
  const std::size_t n = a.dim();
  if (check == IdealCheck::automatic) check = n <= 64 ? IdealCheck::exhaustive : IdealCheck::sampled;
  if (check == IdealCheck::off || ideal_vectors.empty()) return;
  RowEchelon ech(n);
  for (const auto& v : ideal_vectors) ech.insert(v);
  auto fail = [](const std::string& side) {
    throw Error(ErrorKind::not_an_ideal, "span is not closed under " + side + " multiplication");
  };
  if (check == IdealCheck::exhaustive) {
    for (const auto& v : ideal_vectors) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!ech.contains(left_basis_multiply(a, i, v))) fail("left");
        if (!ech.contains(right_basis_multiply(a, v, i))) fail("right");
      }
    }
    return;
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < 32; ++s) {
    Vec v(n);
    for (const auto& b : ideal_vectors) axpy(v, Rational(static_cast<long>(rng() % 7) - 3), b);
    std::size_t i = rng() % n;
    if (!ech.contains(left_basis_multiply(a, i, v))) fail("left");
    if (!ech.contains(right_basis_multiply(a, v, i))) fail("right");
  }
}

Quotient quotient_by_ideal(const Algebra& a, const std::vector<Vec>& ideal_vectors, IdealCheck check,
                           std::uint64_t seed) {
  check_two_sided_ideal(a, ideal_vectors, check, seed);
  Quotient q;
  q.ideal = reduce_ideal_basis(ideal_vectors, a.dim());
  const auto& m = q.ideal.complement;
  const std::size_t r = m.size();
  q.algebra = Algebra(r);
  std::vector<SparseRow> unit_image(a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) {
    SparseRow e;
    e.idx.push_back(c);
    e.val.push_back(Rational(1));
    unit_image[c] = q.ideal.project(e);
  }
  Vec work(r);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const SparseRow& row = a.product(m[i], m[j]);
      if (row.idx.size() == 1 && row.val[0] == 1) {
        q.algebra.set_product(i, j, unit_image[row.idx[0]]);
        continue;
      }
      for (std::size_t t = 0; t < row.idx.size(); ++t) {
        const SparseRow& img = unit_image[row.idx[t]];
        for (std::size_t u = 0; u < img.idx.size(); ++u) {
          work[img.idx[u]] += row.val[t] * img.val[u];
          touched.push_back(img.idx[u]);
        }
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      SparseRow out;
      for (auto c : touched) {
        if (sgn(work[c]) != 0) {
          out.idx.push_back(c);
          out.val.push_back(work[c]);
        }
        work[c] = 0;
      }
      touched.clear();
      q.algebra.set_product(i, j, std::move(out));
    }
  if (a.one()) q.algebra.set_one(q.ideal.project(*a.one()));
  if (a.labels()) {
    std::vector<std::string> labels;
    for (auto c : m) labels.push_back((*a.labels())[c]);
    q.algebra.set_labels(labels);
  }
  return q;
}

Vec rcf_coordinates(const std::vector<std::size_t>& pivots, const Vec& v) {
  Vec c(pivots.size());
  for (std::size_t t = 0; t < pivots.size(); ++t) c[t] = v[pivots[t]];
  return c;
}

Algebra restrict_to_subalgebra(const Algebra& a, const std::vector<Vec>& rcf_rows) {
  const std::size_t d = rcf_rows.size();
  std::vector<std::size_t> piv;
  for (const auto& r : rcf_rows) piv.push_back(leading_index(r));
  Algebra s(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec p = multiply(a, rcf_rows[i], rcf_rows[j]);
      Vec c = rcf_coordinates(piv, p);
      Vec back(a.dim());
      for (std::size_t k = 0; k < d; ++k) axpy(back, c[k], rcf_rows[k]);
      if (back != p) throw Error(ErrorKind::not_closed, "product leaves the subalgebra span");
      s.set_product(i, j, SparseRow::from_dense(c));
    }
  }
  return s;
}

}  // namespace wdec
