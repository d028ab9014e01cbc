#include "wdec/malcev.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <map>

#include "wdec/center.hpp"
#include "wdec/error.hpp"

namespace wdec {

std::vector<std::vector<Vec>> radical_power_chain(const Algebra& a, const std::vector<Vec>& radical) {
  std::vector<std::vector<Vec>> chain;
  std::vector<Vec> current = span_basis(radical, a.dim());
  while (!current.empty()) {
    chain.push_back(current);
    RowEchelon next(a.dim());
    for (const auto& x : current)
      for (const auto& y : radical) next.insert(multiply(a, x, y));
    std::vector<Vec> rows = next.canonical_rows();
    if (rows.size() >= current.size()) throw Error(ErrorKind::internal, "radical power chain does not decrease");
    current = std::move(rows);
  }
  return chain;
}

namespace {

std::vector<std::size_t> pivots_of(const std::vector<Vec>& rows) {
  std::vector<std::size_t> p;
  for (const auto& r : rows) p.push_back(leading_index(r));
  return p;
}

// Coordinates of v in the RCF basis zeta, checked.
Vec zeta_coords(const std::vector<Vec>& zeta, const std::vector<std::size_t>& piv, const Vec& v,
                const char* what) {
  Vec c = rcf_coordinates(piv, v);
  Vec back(v.size());
  for (std::size_t l = 0; l < zeta.size(); ++l)
    if (sgn(c[l]) != 0) axpy(back, c[l], zeta[l]);
  if (back != v) throw Error(ErrorKind::internal, std::string("lift: ") + what + " is not in the square-zero ideal");
  return c;
}

// lambda[i][t]: entries l -> lambda_il^t (beta_i zeta_l = sum_t lambda_il^t zeta_t)
// rho[j][t]:    entries l -> rho_lj^t    (zeta_l beta_j = sum_t rho_lj^t zeta_t)
struct Actions {
  std::vector<std::vector<SparseRow>> lambda;
  std::vector<std::vector<SparseRow>> rho;
};

Actions compute_actions(const LiftingProblem& p) {
  const Algebra& b = *p.algebra;
  const std::size_t r = p.beta.size(), s = p.zeta.size();
  auto piv = pivots_of(p.zeta);
  Actions act;
  act.lambda.assign(r, std::vector<SparseRow>(s));
  act.rho.assign(r, std::vector<SparseRow>(s));
  for (std::size_t l = 0; l < s; ++l)
    for (std::size_t i = 0; i < r; ++i) {
      Vec left = zeta_coords(p.zeta, piv, multiply(b, p.beta[i], p.zeta[l]), "beta * zeta");
      Vec right = zeta_coords(p.zeta, piv, multiply(b, p.zeta[l], p.beta[i]), "zeta * beta");
      for (std::size_t t = 0; t < s; ++t) {
        if (sgn(left[t]) != 0) {
          act.lambda[i][t].idx.push_back(l);
          act.lambda[i][t].val.push_back(left[t]);
        }
        if (sgn(right[t]) != 0) {
          act.rho[i][t].idx.push_back(l);
          act.rho[i][t].val.push_back(right[t]);
        }
      }
    }
  return act;
}

// Inner-derivation solutions gamma_i = beta_i zeta_m - zeta_m beta_i, one
// sparse row per m over the unknowns.
std::vector<SparseRow> inner_solutions(const LiftingProblem& p, const Actions& act) {
  const std::size_t r = p.beta.size(), s = p.zeta.size();
  std::vector<std::map<std::size_t, Rational>> rows(s);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < s; ++t) {
      const SparseRow& lam = act.lambda[i][t];
      const SparseRow& rh = act.rho[i][t];
      for (std::size_t q = 0; q < lam.idx.size(); ++q) rows[lam.idx[q]][t * r + i] += lam.val[q];
      for (std::size_t q = 0; q < rh.idx.size(); ++q) rows[rh.idx[q]][t * r + i] -= rh.val[q];
    }
  std::vector<SparseRow> out;
  for (auto& m : rows) {
    SparseRow sr;
    for (const auto& [c, v] : m)
      if (sgn(v) != 0) {
        sr.idx.push_back(c);
        sr.val.push_back(v);
      }
    out.push_back(std::move(sr));
  }
  return out;
}

SparseRow reversed(const SparseRow& v, std::size_t cols) {
  SparseRow out;
  for (std::size_t q = v.idx.size(); q-- > 0;) {
    out.idx.push_back(cols - 1 - v.idx[q]);
    out.val.push_back(v.val[q]);
  }
  return out;
}


struct IntVec {
  std::vector<std::size_t> idx;
  std::vector<std::int64_t> val;
  Integer den;
};

struct IntStructure {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows;
};

std::optional<IntStructure> integer_structure(const Algebra& a) {
  IntStructure st;
  st.n = a.dim();
  st.rows.resize(st.n * st.n);
  for (std::size_t i = 0; i < st.n; ++i)
    for (std::size_t j = 0; j < st.n; ++j) {
      const SparseRow& row = a.product(i, j);
      for (std::size_t q = 0; q < row.idx.size(); ++q) {
        const Rational& c = row.val[q];
        if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
        st.rows[i * st.n + j].emplace_back(row.idx[q], c.get_num().get_si());
      }
    }
  return st;
}

std::optional<IntVec> integer_vector(const Vec& v) {
  IntVec out;
  out.den = 1;
  for (const auto& x : v)
    if (sgn(x) != 0) out.den = lcm(out.den, Integer(x.get_den()));
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (sgn(v[t]) == 0) continue;
    Integer m = v[t].get_num() * (out.den / v[t].get_den());
    if (!m.fits_slong_p()) return std::nullopt;
    out.idx.push_back(t);
    out.val.push_back(m.get_si());
  }
  return out;
}

// x * y with integer entries accumulated into acc; false on overflow (acc
// and touched are then reset).
bool integer_product(const IntStructure& st, const IntVec& x, const IntVec& y, std::vector<std::int64_t>& acc,
                     std::vector<std::size_t>& touched) {
  for (std::size_t p = 0; p < x.idx.size(); ++p)
    for (std::size_t q = 0; q < y.idx.size(); ++q) {
      std::int64_t xy;
      bool bad = __builtin_mul_overflow(x.val[p], y.val[q], &xy);
      for (const auto& [k, c] : st.rows[x.idx[p] * st.n + y.idx[q]]) {
        std::int64_t term;
        bad = bad || __builtin_mul_overflow(xy, c, &term) || __builtin_add_overflow(acc[k], term, &acc[k]);
        touched.push_back(k);
      }
      if (bad) {
        for (auto t : touched) acc[t] = 0;
        touched.clear();
        return false;
      }
    }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  return true;
}

void sparse_axpy(Vec& x, const Rational& f, const SparseRow& v) {
  for (std::size_t q = 0; q < v.idx.size(); ++q) x[v.idx[q]] += f * v.val[q];
}

}  // namespace

LiftFamily solve_square_zero_linear(const LiftingProblem& p) {
  const Algebra& b = *p.algebra;
  const Algebra& d = *p.target;
  const std::size_t r = p.beta.size(), s = p.zeta.size();
  if (d.dim() != r) throw Error(ErrorKind::input, "lift: target dimension does not match the representatives");
  const std::size_t unknowns = r * s;
  LiftFamily fam;
  fam.particular.assign(unknowns, Rational(0));
  if (s == 0) return fam;

  auto piv = pivots_of(p.zeta);
  Actions act = compute_actions(p);
  RowEchelon ech(unknowns + 1);
  std::map<std::size_t, Rational> row;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const SparseRow& dij = d.product(i, j);
      Vec delta = multiply(b, p.beta[i], p.beta[j]);
      for (std::size_t q = 0; q < dij.idx.size(); ++q) axpy(delta, -dij.val[q], p.beta[dij.idx[q]]);
      Vec sigma = zeta_coords(p.zeta, piv, delta, "beta_i beta_j - sum_k d_ij^k beta_k");
      for (std::size_t t = 0; t < s; ++t) {
        row.clear();
        const SparseRow& lam = act.lambda[i][t];
        const SparseRow& rh = act.rho[j][t];
        for (std::size_t q = 0; q < lam.idx.size(); ++q) row[lam.idx[q] * r + j] += lam.val[q];
        for (std::size_t q = 0; q < rh.idx.size(); ++q) row[rh.idx[q] * r + i] += rh.val[q];
        for (std::size_t q = 0; q < dij.idx.size(); ++q) row[t * r + dij.idx[q]] -= dij.val[q];
        if (sgn(sigma[t]) != 0) row[unknowns] = -sigma[t];
        SparseRow sr;
        for (const auto& [col, val] : row) {
          if (sgn(val) == 0) continue;
          sr.idx.push_back(col);
          sr.val.push_back(val);
        }
        if (!sr.empty()) ech.insert(sr);
      }
    }

  std::vector<SparseRow> rows = ech.canonical_sparse_rows();
  std::vector<std::size_t> pivots = ech.pivots();
  if (!pivots.empty() && pivots.back() == unknowns) {
    throw Error(ErrorKind::internal, "lift: square-zero system is inconsistent");
  }
  std::vector<bool> is_pivot(unknowns, false);
  std::vector<std::map<std::size_t, Rational>> by_free(unknowns);
  for (std::size_t h = 0; h < pivots.size(); ++h) {
    is_pivot[pivots[h]] = true;
    const SparseRow& rw = rows[h];
    for (std::size_t q = 0; q < rw.idx.size(); ++q) {
      if (rw.idx[q] == unknowns) {
        fam.particular[pivots[h]] = rw.val[q];
      } else if (rw.idx[q] != pivots[h]) {
        by_free[rw.idx[q]][pivots[h]] = -rw.val[q];
      }
    }
  }
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    by_free[f][f] = 1;
    SparseRow v;
    for (const auto& [c, val] : by_free[f]) {
      v.idx.push_back(c);
      v.val.push_back(val);
    }
    fam.free_columns.push_back(f);
    fam.homogeneous.push_back(std::move(v));
  }
  return fam;
}

LiftFamily solve_square_zero_units(const LiftingProblem& p) {
  const Algebra& b = *p.algebra;
  const Algebra& d = *p.target;
  const std::size_t r = p.beta.size(), s = p.zeta.size();
  if (d.dim() != r) throw Error(ErrorKind::input, "lift: target dimension does not match the representatives");
  std::size_t covered = 0;
  for (auto q : p.unit_sizes) covered += q * q;
  if (covered != r) throw Error(ErrorKind::input, "lift: matrix-unit blocks do not cover the representatives");
  const std::size_t unknowns = r * s;
  LiftFamily fam;
  fam.particular.assign(unknowns, Rational(0));
  if (s == 0) return fam;
  auto piv = pivots_of(p.zeta);

  auto defect = [&](std::size_t m, std::size_t i) {
    Vec v = multiply(b, p.beta[m], p.beta[i]);
    const SparseRow& dmi = d.product(m, i);
    for (std::size_t q = 0; q < dmi.idx.size(); ++q) axpy(v, -dmi.val[q], p.beta[dmi.idx[q]]);
    return v;
  };

  // gamma(x) = -sum_a E_a1 f(E_1a, x)
  for (std::size_t i = 0; i < r; ++i) {
    Vec g(b.dim());
    std::size_t off = 0;
    for (auto q : p.unit_sizes) {
      for (std::size_t a = 0; a < q; ++a) {
        Vec f = defect(off + a, i);
        if (is_zero(f)) continue;
        axpy(g, Rational(-1), multiply(b, p.beta[off + a * q], f));
      }
      off += q * q;
    }
    Vec c = zeta_coords(p.zeta, piv, g, "particular correction");
    for (std::size_t l = 0; l < s; ++l) fam.particular[l * r + i] = c[l];
  }

  // The homogeneous solutions are the inner derivations; reduce them from
  // the right so the free columns match those of the full system.
  Actions act = compute_actions(p);
  RowEchelon ech(unknowns);
  for (const auto& h : inner_solutions(p, act))
    if (!h.empty()) ech.insert(reversed(h, unknowns));
  std::vector<SparseRow> rows = ech.canonical_sparse_rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    SparseRow h = reversed(*it, unknowns);
    fam.free_columns.push_back(h.idx.back());
    fam.homogeneous.push_back(std::move(h));
  }
  for (std::size_t k = 0; k < fam.params(); ++k) {
    Rational t = fam.particular[fam.free_columns[k]];
    if (sgn(t) != 0) sparse_axpy(fam.particular, -t, fam.homogeneous[k]);
  }
  return fam;
}

LiftFamily solve_square_zero(const LiftingProblem& p) {
  return p.unit_sizes.empty() ? solve_square_zero_linear(p) : solve_square_zero_units(p);
}

std::size_t expected_parameter_count(const LiftingProblem& p) {
  if (p.zeta.empty()) return 0;
  const std::size_t unknowns = p.beta.size() * p.zeta.size();
  Actions act = compute_actions(p);
  RowEchelon ech(unknowns);
  for (const auto& h : inner_solutions(p, act))
    if (!h.empty()) ech.insert(h);
  return ech.rank();
}

std::vector<Vec> apply_lift(const LiftingProblem& p, const Vec& x) {
  const std::size_t r = p.beta.size(), s = p.zeta.size();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < r; ++i) {
    Vec v = p.beta[i];
    for (std::size_t l = 0; l < s; ++l)
      if (sgn(x[l * r + i]) != 0) axpy(v, x[l * r + i], p.zeta[l]);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

Algebra structure_in_basis_of_span(const Algebra& q, const std::vector<Vec>& w) {
  Algebra d(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) {
      auto c = coordinates_in_basis(w, multiply(q, w[i], w[j]));
      if (!c) throw Error(ErrorKind::not_closed, "block_structure: block is not closed under multiplication");
      d.set_product(i, j, SparseRow::from_dense(*c));
    }
  return d;
}

}  // namespace

Algebra structure_in_basis(const Algebra& q, const std::vector<Vec>& w) {
  const std::size_t r = q.dim();
  if (w.size() != r) throw Error(ErrorKind::input, "structure_in_basis: need dim(q) basis vectors");
  MatrixQ inv = invert(MatrixQ::from_columns(w, r));
  Algebra d(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Vec p = multiply(q, w[i], w[j]);
      Vec c(r);
      for (std::size_t col = 0; col < r; ++col) {
        if (sgn(p[col]) == 0) continue;
        for (std::size_t row = 0; row < r; ++row)
          if (sgn(inv(row, col)) != 0) c[row] += inv(row, col) * p[col];
      }
      d.set_product(i, j, SparseRow::from_dense(c));
    }
  return d;
}

Algebra block_structure(const Algebra& q, const std::vector<std::vector<Vec>>& blocks,
                        const std::vector<std::size_t>& unit_sizes) {
  if (blocks.size() != unit_sizes.size()) throw Error(ErrorKind::input, "block_structure: one size per block");
  std::size_t r = 0;
  for (const auto& bl : blocks) r += bl.size();
  Algebra d(r);
  std::size_t off = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& bl = blocks[k];
    const std::size_t m = bl.size(), qk = unit_sizes[k];
    if (qk != 0) {
      if (qk * qk != m) throw Error(ErrorKind::input, "block_structure: matrix-unit block has the wrong size");
      for (std::size_t i = 0; i < qk; ++i)
        for (std::size_t j = 0; j < qk; ++j)
          for (std::size_t l = 0; l < qk; ++l) {
            SparseRow row;
            row.idx.push_back(off + i * qk + l);
            row.val.push_back(Rational(1));
            d.set_product(off + i * qk + j, off + j * qk + l, row);
          }
    } else {
      Algebra sub = structure_in_basis_of_span(q, bl);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const SparseRow& src = sub.product(i, j);
          SparseRow row;
          for (std::size_t t = 0; t < src.idx.size(); ++t) {
            row.idx.push_back(off + src.idx[t]);
            row.val.push_back(src.val[t]);
          }
          d.set_product(off + i, off + j, row);
        }
    }
    off += m;
  }
  return d;
}

LiftedBasis lift_general(const Algebra& a, const RadicalData& radical, const std::vector<Vec>& w,
                         const Algebra& target, const std::map<std::string, Rational>& params,
                         const std::vector<std::size_t>& unit_sizes) {
  const std::size_t n = a.dim();
  auto chain = radical_power_chain(a, radical.reduced_basis());
  LiftedBasis out;
  out.stages = chain.size();

  std::vector<Vec> cur = w;
  ReducedIdealBasis prev = radical.quotient.ideal;
  std::map<std::string, bool> used;
  for (const auto& kv : params) used[kv.first] = false;

  for (std::size_t mu = 1; mu <= chain.size(); ++mu) {
    const std::vector<Vec> next = mu < chain.size() ? chain[mu] : std::vector<Vec>{};
    Quotient qb = quotient_by_ideal(a, next, IdealCheck::off);

    LiftingProblem p;
    p.algebra = &qb.algebra;
    p.target = &target;
    p.unit_sizes = unit_sizes;
    for (const auto& v : cur) p.beta.push_back(qb.project(prev.lift(v)));
    std::vector<std::size_t> next_piv = pivots_of(next);
    std::vector<Vec> comp;
    for (const auto& row : chain[mu - 1]) {
      std::size_t lead = leading_index(row);
      bool shared = false;
      for (auto q : next_piv) shared = shared || q == lead;
      if (!shared) comp.push_back(qb.project(row));
    }
    p.zeta = span_basis(comp, qb.algebra.dim());

    LiftFamily fam = solve_square_zero(p);
    std::size_t expected = unit_sizes.empty() ? expected_parameter_count(p) : fam.params();
    if (fam.params() != expected) {
      throw Error(ErrorKind::internal, "lift: stage " + std::to_string(mu) + " has " + std::to_string(fam.params()) +
                                           " free parameters, expected " + std::to_string(expected));
    }
    const std::size_t r = p.beta.size();
    const std::string prefix = mu == 1 ? "" : "s" + std::to_string(mu) + ".";
    Vec x = fam.particular;
    for (std::size_t f = 0; f < fam.params(); ++f) {
      std::size_t col = fam.free_columns[f];
      std::string name = prefix + "x" + std::to_string(col % r + 1) + "_" + std::to_string(col / r + 1);
      out.param_names.push_back(name);
      auto it = params.find(name);
      if (it == params.end()) continue;
      used[name] = true;
      if (sgn(it->second) != 0) {
        sparse_axpy(x, it->second, fam.homogeneous[f]);
        out.values[name] = it->second;
      }
    }
    out.params_free += fam.params();
    cur = apply_lift(p, x);
    prev = qb.ideal;
  }

  for (const auto& [name, ok] : used)
    if (!ok) throw Error(ErrorKind::input, "lift parameter '" + name + "' is not a free parameter");

  if (chain.empty()) {
    for (auto& v : cur) v = prev.lift(v);
  }
  for (const auto& v : cur)
    if (v.size() != n) throw Error(ErrorKind::internal, "lift: final stage did not reach the algebra");
  out.basis = std::move(cur);
  return out;
}

LiftedBasis lift_square_zero(const Algebra& a, const RadicalData& radical, const std::vector<Vec>& w,
                             const Algebra& target, const std::map<std::string, Rational>& params,
                         const std::vector<std::size_t>& unit_sizes) {
  auto chain = radical_power_chain(a, radical.reduced_basis());
  if (chain.size() > 1) throw Error(ErrorKind::input, "lift_square_zero: the radical does not square to zero");
  return lift_general(a, radical, w, target, params, unit_sizes);
}

std::optional<std::string> check_lift(const Algebra& a, const RadicalData& radical, const std::vector<Vec>& w,
                                      const Algebra& target, const std::vector<Vec>& lifted) {
  const std::size_t r = target.dim();
  if (lifted.size() != r || w.size() != r) return "lifted basis has the wrong size";
  for (std::size_t i = 0; i < r; ++i) {
    if (lifted[i].size() != a.dim()) return "lifted vector has the wrong length";
    if (radical.quotient.project(lifted[i]) != w[i]) {
      return "lifted element " + std::to_string(i + 1) + " does not project onto its quotient element";
    }
  }
  std::optional<IntStructure> ist = integer_structure(a);
  std::vector<std::optional<IntVec>> iv;
  for (const auto& v : lifted) iv.push_back(ist ? integer_vector(v) : std::nullopt);
  std::vector<std::int64_t> acc(a.dim(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const SparseRow& d = target.product(i, j);
      bool ok;
      if (iv[i] && iv[j] && integer_product(*ist, *iv[i], *iv[j], acc, touched) && d.empty()) {
        ok = true;
        for (auto t : touched) {
          ok = ok && acc[t] == 0;
          acc[t] = 0;
        }
        touched.clear();
      } else if (!touched.empty()) {
        Vec expect(a.dim());
        for (std::size_t q = 0; q < d.idx.size(); ++q) axpy(expect, d.val[q], lifted[d.idx[q]]);
        const Integer scale = iv[i]->den * iv[j]->den;
        ok = true;
        for (auto t : touched) {
          if (acc[t] != 0) {
            Rational got(Integer(static_cast<long>(acc[t])), scale);
            got.canonicalize();
            if (got != expect[t]) ok = false;
            expect[t] = 0;
          }
          acc[t] = 0;
        }
        touched.clear();
        ok = ok && is_zero(expect);
      } else {
        Vec p = multiply(a, lifted[i], lifted[j]);
        for (std::size_t q = 0; q < d.idx.size(); ++q) axpy(p, -d.val[q], lifted[d.idx[q]]);
        ok = is_zero(p);
      }
      if (!ok) {
        return "lifted elements " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
               " violate the quotient structure constants";
      }
    }
  // lifted_i projects onto w_i, so lifted and the radical span A exactly
  // when the w_i form a basis of the quotient
  RowEchelon ech(radical.quotient.algebra.dim());
  for (const auto& v : w) ech.insert(v);
  if (ech.rank() != radical.quotient.algebra.dim() || r + radical.dim() != a.dim())
    return "lifted basis and radical do not span the algebra";
  return std::nullopt;
}

}  // namespace wdec
