#include "wdec/radical.hpp"

#include <string>

#include "wdec/error.hpp"

namespace wdec {

Vec basis_traces(const Algebra& a) {
  const std::size_t n = a.dim();
  Vec t(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const SparseRow& row = a.product(k, l);
      for (std::size_t s = 0; s < row.idx.size(); ++s)
        if (row.idx[s] == l) t[k] += row.val[s];
    }
  return t;
}

Rational trace_of_left_mult(const Algebra& a, const Vec& x) {
  Vec t = basis_traces(a);
  Rational s = 0;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (sgn(x[k]) != 0) s += x[k] * t[k];
  return s;
}

MatrixQ dickson_matrix(const Algebra& a) {
  const std::size_t n = a.dim();
  Vec t = basis_traces(a);
  MatrixQ delta(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseRow& row = a.product(j, i);
      Rational s = 0;
      for (std::size_t q = 0; q < row.idx.size(); ++q) s += row.val[q] * t[row.idx[q]];
      delta(i, j) = s;
    }
  return delta;
}

MatrixQ drazin_matrix(const MultiplicationTable& t) {
  const std::size_t n = t.order;
  std::vector<long> fixed(n, 0);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t l = 0; l < n; ++l)
      if (t(s, l) == l) ++fixed[s];
  MatrixQ delta(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) delta(i, j) = fixed[t(j, i)];
  return delta;
}

RadicalData radical_from_delta(const Algebra& a, MatrixQ delta, const RadicalOptions& opt) {
  if (!a.one()) throw Error(ErrorKind::input, "radical: algebra must be unital (adjoin an identity first)");
  if (delta.rows() != a.dim() || delta.cols() != a.dim()) throw Error(ErrorKind::input, "radical: delta has wrong shape");
  RadicalData r;
  r.delta = std::move(delta);
  r.delta_rcf = rcf(r.delta);
  r.canonical_basis = nullspace_basis(r.delta_rcf);
  try {
    r.quotient = quotient_by_ideal(a, r.canonical_basis, opt.ideal_check, opt.seed);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::not_an_ideal) {
      throw Error(ErrorKind::internal, std::string("radical: trace-form kernel is not an ideal: ") + e.what());
    }
    throw;
  }
  return r;
}

RadicalData radical_basis(const Algebra& a, const RadicalOptions& opt) {
  return radical_from_delta(a, dickson_matrix(a), opt);
}

RadicalData radical_basis(const Algebra& a, const MultiplicationTable& t, const RadicalOptions& opt) {
  if (t.order != a.dim()) throw Error(ErrorKind::input, "radical: table order does not match algebra");
  return radical_from_delta(a, drazin_matrix(t), opt);
}

void require_rational_field(std::string_view field) {
  if (field != "Q" && field != "q" && field != "QQ") {
    throw Error(ErrorKind::unsupported, "unsupported field '" + std::string(field) + "': only Q is supported");
  }
}

}  // namespace wdec
