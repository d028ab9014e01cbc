#ifndef WDEC_TESTS_SUPPORT_HPP
#define WDEC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wdec/algebra.hpp"
#include "wdec/boolsemi.hpp"
#include "wdec/matrix.hpp"
#include "wdec/pipeline.hpp"
#include "wdec/polynomial.hpp"
#include "wdec/rational.hpp"

namespace wtest {

using wdec::Algebra;
using wdec::MatrixQ;
using wdec::Rational;
using wdec::Vec;

inline Rational q(const char* s) { return wdec::parse_rational(s); }

inline Vec vi(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Vec vs(std::initializer_list<const char*> xs) {
  Vec v;
  for (const char* x : xs) v.push_back(q(x));
  return v;
}

inline MatrixQ mi(const std::vector<std::vector<long>>& rows) {
  MatrixQ m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline MatrixQ ms(const std::vector<std::vector<const char*>>& rows) {
  MatrixQ m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = q(rows[i][j]);
  return m;
}

// ---------------------------------------------------------------------------
// PT2 fixtures, basis a1..a9 in the reference order; quotient basis b1..b7 is
// the image of a3..a9.

inline const std::vector<std::vector<long>> pt2_table = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 2, 3, 1, 1, 6, 2, 3, 1}, {1, 1, 1, 2, 3, 1, 3, 2, 6},
    {1, 4, 5, 1, 1, 9, 4, 5, 1}, {1, 1, 1, 4, 5, 1, 5, 4, 9}, {1, 2, 3, 2, 3, 6, 6, 6, 6},
    {1, 2, 3, 4, 5, 6, 7, 8, 9}, {1, 4, 5, 2, 3, 9, 8, 7, 6}, {1, 4, 5, 4, 5, 9, 9, 9, 9}};

inline const std::vector<std::vector<long>> pt2_delta = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 4, 1, 1, 1, 4, 4, 1, 1}, {1, 1, 1, 4, 1, 1, 1, 4, 4},
    {1, 1, 4, 1, 1, 4, 1, 4, 1}, {1, 1, 1, 1, 4, 1, 4, 1, 4}, {1, 4, 1, 4, 1, 4, 4, 4, 4},
    {1, 4, 1, 1, 4, 4, 9, 1, 4}, {1, 1, 4, 4, 1, 4, 1, 9, 4}, {1, 1, 4, 1, 4, 4, 4, 4, 4}};

inline const std::vector<std::vector<long>> pt2_delta_rcf = {
    {1, 0, 0, 0, 0, -1, 0, 0, -1}, {0, 1, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 1},   {0, 0, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0},   {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}};

inline const std::vector<Vec> pt2_radical_canonical = {vi({1, -1, -1, 0, 0, 1, 0, 0, 0}),
                                                       vi({1, 0, 0, -1, -1, 0, 0, 0, 1})};
inline const std::vector<Vec> pt2_radical_reduced = {vi({1, 0, 0, -1, -1, 0, 0, 0, 1}),
                                                     vi({0, 1, 1, -1, -1, -1, 0, 0, 1})};

inline const std::vector<std::vector<long>> pt2_center_rcf = {
    {1, 0, 0, 1, 0, 1, 0}, {0, 1, 0, 0, 0, 1, 1}, {0, 0, 1, -1, 0, 0, 1}};

inline const std::vector<Vec> pt2_center = {vi({-1, 0, 1, 1, 0, 0, 0}), vi({0, 0, 0, 0, 1, 0, 0}),
                                            vi({-1, -1, 0, 0, 0, 1, 0}), vi({0, -1, -1, 0, 0, 0, 1})};

// z_i z_j in z-coordinates.
inline Vec pt2_center_product(std::size_t i, std::size_t j) {
  static const std::vector<std::vector<Vec>> t = {
      {vi({1, 0, 0, 0}), vi({1, 0, 0, 0}), vi({0, 0, 0, 1}), vi({0, 0, 0, 1})},
      {vi({1, 0, 0, 0}), vi({0, 1, 0, 0}), vi({0, 0, 1, 0}), vi({0, 0, 0, 1})},
      {vi({0, 0, 0, 1}), vi({0, 0, 1, 0}), vi({-1, 1, 0, -1}), vi({0, 0, 0, -1})},
      {vi({0, 0, 0, 1}), vi({0, 0, 0, 1}), vi({0, 0, 0, -1}), vi({0, 0, 0, -1})}};
  return t[i][j];
}

inline const std::vector<Vec> pt2_idempotents_z = {vs({"-1/2", "1/2", "-1/2", "1/2"}),
                                                   vs({"-1/2", "1/2", "1/2", "-1/2"}), vi({0, 0, 0, -1}),
                                                   vi({1, 0, 0, 1})};

inline const std::vector<Vec> pt2_idempotents = {vs({"1", "0", "-1", "-1/2", "1/2", "-1/2", "1/2"}),
                                                 vs({"0", "0", "0", "-1/2", "1/2", "1/2", "-1/2"}),
                                                 vi({0, 1, 1, 0, 0, 0, -1}), vi({-1, -1, 0, 1, 0, 0, 1})};

inline const std::vector<Vec> pt2_simple_ideal = {vi({1, 0, 0, 0, 0, 0, -1}), vi({0, 1, 0, 0, 0, 0, -1}),
                                                  vi({0, 0, 1, 0, 0, 0, -1}), vi({0, 0, 0, 1, 0, 0, -1})};

inline const std::vector<Vec> pt2_left_ideal = {vi({1, 0, -1, 0, 0, 0, 0}), vi({0, 1, 0, 0, 0, 0, -1})};

inline const std::vector<Vec> pt2_units = {vi({-1, 0, 1, 1, 0, 0, -1}), vi({0, 0, 0, -1, 0, 0, 1}),
                                           vi({0, 0, 1, 0, 0, 0, -1}), vi({0, -1, -1, 0, 0, 0, 2})};

inline const MatrixQ pt2_m = ms({{"1", "0", "0", "-1", "0", "0", "0"},
                                 {"0", "0", "1", "0", "0", "0", "-1"},
                                 {"-1", "0", "1", "1", "0", "1", "-1"},
                                 {"-1/2", "-1/2", "0", "1", "-1", "0", "0"},
                                 {"1/2", "1/2", "0", "0", "0", "0", "0"},
                                 {"-1/2", "1/2", "0", "0", "0", "0", "0"},
                                 {"1/2", "-1/2", "-1", "-1", "1", "-1", "2"}});

inline const MatrixQ pt2_m_inv = mi({{0, 0, 0, 0, 1, -1, 0},
                                     {0, 0, 0, 0, 1, 1, 0},
                                     {1, 1, 1, 1, 1, 1, 1},
                                     {-1, 0, 0, 0, 1, -1, 0},
                                     {-1, 0, 0, -1, 0, -1, 0},
                                     {1, -1, 1, 0, 0, 0, 0},
                                     {1, 0, 1, 1, 1, 1, 1}});

// Representation table: for a1..a9 the three 1-dim values in printed column
// order, then the 2x2 matrix.
struct Pt2Rep {
  long c1, c2, c3;
  std::vector<std::vector<long>> m;
};
inline const std::vector<Pt2Rep> pt2_reps = {
    {0, 0, 1, {{0, 0}, {0, 0}}},   {0, 0, 1, {{1, 0}, {-1, 0}}}, {0, 0, 1, {{-1, -1}, {1, 1}}},
    {0, 0, 1, {{0, 0}, {-1, 0}}},  {0, 0, 1, {{0, 0}, {1, 1}}},  {0, 0, 1, {{0, -1}, {0, 1}}},
    {1, 1, 1, {{1, 0}, {0, 1}}},   {1, -1, 1, {{-1, -1}, {0, 1}}}, {0, 0, 1, {{0, 0}, {0, 1}}}};

// Coefficients of gamma_i over a1..a9 as a function of the free parameters.
inline std::vector<Vec> pt2_gamma(const Rational& al, const Rational& be) {
  const Rational h(1, 2);
  auto row = [](std::initializer_list<Rational> xs) { return Vec(xs); };
  return {row({0, -h, -h, h, h, h, 0, 0, -h}),
          row({-be, h - al, h - al, -h + al + be, -h + al + be, -h + al, 0, 0, h - al - be}),
          row({1, 0, 0, -1, -1, 0, 0, 0, 1}),
          row({0, al, al, -al, -al, -al, 0, 0, al}),
          row({0, be, be, -be, -be, -be, 0, 0, be}),
          row({al, 0, 0, -al, -al, 0, 0, 0, al}),
          row({-1 + be, 0, 0, 1 - be, 1 - be, 0, 0, 0, -1 + be})};
}

inline const std::vector<Vec> pt2_wedderburn_basis = {
    vs({"0", "-1/2", "1/2", "1/2", "-1/2", "0", "1/2", "-1/2", "0"}),
    vs({"0", "-1/2", "-1/2", "1/2", "1/2", "0", "1/2", "1/2", "-1"}),
    vi({1, 0, 0, 0, 0, 0, 0, 0, 0}),
    vi({0, 1, 0, -1, 0, 0, 0, 0, 0}),
    vi({0, 0, 0, 0, 0, -1, 0, 0, 1}),
    vi({1, 0, 0, -1, 0, 0, 0, 0, 0}),
    vi({-1, 0, 0, 0, 0, 0, 0, 0, 1}),
    vi({1, 0, 0, -1, -1, 0, 0, 0, 1}),
    vi({0, 1, 1, -1, -1, -1, 0, 0, 1})};

// The nine 2x2 matrices of the reference order, row-major bits.
inline const std::vector<std::vector<int>> pt2_matrices = {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0},
                                                           {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0},
                                                           {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};

inline wdec::MultiplicationTable pt2_mult_table() {
  wdec::MultiplicationTable t;
  t.order = 9;
  for (const auto& r : pt2_table)
    for (long x : r) t.mu.push_back(static_cast<std::size_t>(x - 1));
  return t;
}

inline Algebra pt2_algebra() { return wdec::table_algebra(pt2_mult_table()); }

// ---------------------------------------------------------------------------
// Independent oracles.

using Dense = std::vector<std::vector<Rational>>;

inline Dense dense_of(const MatrixQ& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Dense c(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

// Column j holds the coordinates of x a_j.
inline Dense oracle_left_matrix(const Algebra& a, const Vec& x) {
  const std::size_t n = a.dim();
  Dense l(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& row = a.product(i, j);
      for (std::size_t t = 0; t < row.idx.size(); ++t) l[row.idx[t]][j] += x[i] * row.val[t];
    }
  }
  return l;
}

inline Vec oracle_multiply(const Algebra& a, const Vec& x, const Vec& y) {
  Dense l = oracle_left_matrix(a, x);
  Vec out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] += l[i][j] * y[j];
  return out;
}

// Delta_ij = trace(L_{a_j} L_{a_i}).
inline Dense oracle_trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Dense> ls;
  for (std::size_t i = 0; i < n; ++i) ls.push_back(oracle_left_matrix(a, wdec::unit_vec(n, i)));
  Dense d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational t = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) t += ls[j][r][s] * ls[i][s][r];
      d[i][j] = t;
    }
  return d;
}

// Textbook Gauss-Jordan; returns the nonzero rows of the RCF.
inline Dense oracle_rcf(Dense m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

inline std::size_t oracle_rank(const Dense& m) { return oracle_rcf(m).size(); }

inline std::size_t oracle_span_dim(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  return oracle_rank(Dense(vs.begin(), vs.end()));
}

inline bool oracle_same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  Dense ra = a.empty() ? Dense{} : oracle_rcf(Dense(a.begin(), a.end()));
  Dense rb = b.empty() ? Dense{} : oracle_rcf(Dense(b.begin(), b.end()));
  return ra == rb;
}

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Q[x]/(f), f monic, basis 1, x, ..., x^(d-1).
inline Algebra truncated_polynomial_algebra(const std::vector<long>& f_low_to_high) {
  const std::size_t d = f_low_to_high.size() - 1;
  Algebra a(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rational> p(2 * d, Rational(0));
      p[i + j] = 1;
      for (std::size_t k = 2 * d - 1; k >= d; --k) {
        if (p[k] == 0) continue;
        Rational c = p[k];
        for (std::size_t t = 0; t <= d; ++t) p[k - d + t] -= c * f_low_to_high[t];
      }
      for (std::size_t k = 0; k < d; ++k)
        if (p[k] != 0) a.add_constant(i, j, k, p[k]);
    }
  a.set_one(wdec::unit_vec(d, 0));
  return a;
}

// M_q(Q) on the units E_ij, index i*q+j.
inline Algebra matrix_unit_algebra(std::size_t qn) {
  Algebra a(qn * qn);
  for (std::size_t i = 0; i < qn; ++i)
    for (std::size_t j = 0; j < qn; ++j)
      for (std::size_t l = 0; l < qn; ++l) a.add_constant(i * qn + j, j * qn + l, i * qn + l, 1);
  Vec one(qn * qn);
  for (std::size_t i = 0; i < qn; ++i) one[i * qn + i] = 1;
  a.set_one(one);
  return a;
}

// Group algebra of S_n on permutations listed in lexicographic order.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

inline Algebra symmetric_group_algebra(int n) {
  auto perms = permutations(n);
  Algebra a(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<int> c(n);
      for (int t = 0; t < n; ++t) c[t] = perms[i][perms[j][t]];
      auto k = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      a.add_constant(i, j, k, 1);
    }
  auto e = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), perms[0]) - perms.begin());
  a.set_one(wdec::unit_vec(perms.size(), e));
  return a;
}

// Brute-force enumeration of n x n zero-one matrices.
inline std::uint64_t oracle_family_count(const std::string& family, int n) {
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    auto at = [&](int i, int j) { return (bits >> (i * n + j)) & 1u; };
    std::vector<int> rowc(n, 0), colc(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j)) ++rowc[i], ++colc[j];
    bool ok = true;
    if (family == "sym") {
      for (int i = 0; i < n; ++i) ok = ok && rowc[i] == 1 && colc[i] == 1;
    } else if (family == "si") {
      for (int i = 0; i < n; ++i) ok = ok && rowc[i] <= 1 && colc[i] <= 1;
    } else if (family == "ft") {
      for (int i = 0; i < n; ++i) ok = ok && colc[i] == 1;
    } else if (family == "pt") {
      for (int i = 0; i < n; ++i) ok = ok && colc[i] <= 1;
    } else if (family == "qp") {
      for (int i = 0; i < n; ++i) ok = ok && rowc[i] >= 1 && colc[i] >= 1;
    } else if (family == "hall") {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      ok = false;
      do {
        bool all = true;
        for (int i = 0; i < n; ++i) all = all && at(i, p[i]);
        ok = ok || all;
      } while (!ok && std::next_permutation(p.begin(), p.end()));
    }
    if (ok) ++count;
  }
  return count;
}

// A random associative algebra: a semigroup or group algebra modulo the
// two-sided ideal generated by one sparse element, written in a random
// integral basis so its identity is a combination of basis vectors.
struct RandomAlgebra {
  Algebra algebra;
  std::string origin;
};

inline Algebra change_of_basis(const Algebra& a, const MatrixQ& p) {
  // new basis vector k = column k of p
  const std::size_t n = a.dim();
  MatrixQ pinv = wdec::invert(p);
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < n; ++k) cols.push_back(p.col(k));
  Algebra out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = wdec::multiply(a, cols[i], cols[j]);
      Vec c = pinv.apply(prod);
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) out.add_constant(i, j, k, c[k]);
    }
  if (a.one()) out.set_one(pinv.apply(*a.one()));
  return out;
}

inline RandomAlgebra random_algebra(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  static const std::vector<std::pair<const char*, std::size_t>> bases = {
      {"pt", 2}, {"ft", 2}, {"si", 2}, {"qp", 2}, {"b", 2}, {"ft", 3}, {"si", 3}, {"sym", 3}, {"pt", 3}};
  const auto& [fam, n] = bases[rng() % bases.size()];
  Algebra a = wdec::table_algebra(wdec::table_of(wdec::generate(wdec::parse_family(fam), n)));
  const std::size_t dim = a.dim();
  Vec g(dim);
  const std::size_t terms = 1 + rng() % 3;
  for (std::size_t t = 0; t < terms; ++t) g[rng() % dim] += static_cast<long>(rng() % 5) - 2;
  std::vector<Vec> ideal;
  if (!wdec::is_zero(g)) ideal = wdec::subspace_closure(a, {g}, wdec::ClosureMode::two_sided);
  Algebra quotient = ideal.size() == dim ? a : wdec::quotient_by_ideal(a, ideal).algebra;
  const std::size_t r = quotient.dim();
  MatrixQ p = MatrixQ::identity(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (rng() % 4 == 0) p(i, j) = static_cast<long>(rng() % 5) - 2;
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  MatrixQ pp(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) pp(perm[i], j) = p(i, j);
  Algebra out = change_of_basis(quotient, pp);
  out.set_one(std::nullopt);
  return {out, std::string(fam) + std::to_string(n) + " / " + std::to_string(ideal.size() == dim ? 0 : ideal.size())};
}

}  // namespace wtest

#endif  // WDEC_TESTS_SUPPORT_HPP
