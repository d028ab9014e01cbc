#include "wdec/wedderburn.hpp"

#include <random>

#include "wdec/center.hpp"
#include "wdec/error.hpp"

namespace wdec {

const char* to_string(ComponentStatus s) {
  switch (s) {
    case ComponentStatus::split: return "split";
    case ComponentStatus::non_split: return "non-split";
    case ComponentStatus::search_failed: return "search-failed";
  }
  return "?";
}

std::vector<Vec> simple_ideal_basis(const Algebra& q, const Vec& e) {
  std::vector<Vec> images;
  images.reserve(2 * q.dim());
  for (std::size_t j = 0; j < q.dim(); ++j) {
    images.push_back(left_basis_multiply(q, j, e));
    images.push_back(right_basis_multiply(q, e, j));
  }
  return span_basis(images, q.dim());
}

namespace {

std::vector<Vec> left_ideal(const Algebra& c, const Vec& x) {
  std::vector<Vec> images;
  images.reserve(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) images.push_back(left_basis_multiply(c, i, x));
  return span_basis(images, c.dim());
}

// {x : x y = 0}, a left ideal of dimension q (q - rank y) when c is M_q.
std::vector<Vec> left_annihilator(const Algebra& c, const Vec& y) {
  std::vector<Vec> cols;
  cols.reserve(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) cols.push_back(left_basis_multiply(c, i, y));
  return nullspace_basis(MatrixQ::from_columns(cols, c.dim()));
}

std::vector<std::size_t> pivots_of(const std::vector<Vec>& rcf_rows) {
  std::vector<std::size_t> p;
  for (const auto& r : rcf_rows) p.push_back(leading_index(r));
  return p;
}

Vec combine(const std::vector<Vec>& rows, const Vec& coeffs, std::size_t dim) {
  Vec v(dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (sgn(coeffs[i]) != 0) axpy(v, coeffs[i], rows[i]);
  return v;
}

// Elements of `ideal` built from a factor of the minimal polynomial of y.
std::vector<Vec> factor_candidates(const Algebra& c, const Vec& one, const Vec& y, RowEchelon& ideal) {
  std::vector<Vec> out;
  Polynomial m = minimal_polynomial(c, one, y);
  if (m.degree() < 2) return out;
  Factorization fac;
  try {
    fac = factor_over_Q(m);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::degree_cap) throw;
    return out;
  }
  if (fac.factors.size() < 2 && fac.factors[0].multiplicity < 2) return out;
  for (const auto& f : fac.factors) {
    Vec w = evaluate_at(c, divmod(m, f.poly).first, one, y);
    for (Vec cand : {w, multiply(c, w, y)}) {
      if (!is_zero(cand) && ideal.contains(cand)) out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<Vec>> find_minimal_left_ideal(const Algebra& c, std::size_t q, const LeftIdealSearch& opt) {
  const std::size_t m = c.dim();
  if (q * q != m) throw Error(ErrorKind::input, "find_minimal_left_ideal: dimension is not q^2");
  if (!c.one()) throw Error(ErrorKind::input, "find_minimal_left_ideal: component has no identity");

  std::vector<Vec> current;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Vec> l = left_ideal(c, unit_vec(m, i));
    if (l.size() == q) return l;
    if (!l.empty() && l.size() < m && (current.empty() || l.size() < current.size())) current = std::move(l);
  }
  if (current.empty()) {
    for (std::size_t i = 0; i < m; ++i) current.push_back(unit_vec(m, i));
  }

  std::mt19937_64 rng(opt.seed);
  while (current.size() > q) {
    RowEchelon membership(m);
    for (const auto& row : current) membership.insert(row);

    std::optional<std::vector<Vec>> smaller;
    auto consider = [&](const Vec& y) {
      if (is_zero(y)) return false;
      std::vector<Vec> l = left_ideal(c, y);
      if (l.size() == m) return false;
      std::vector<Vec> ann = left_annihilator(c, y);
      if (!ann.empty() && ann.size() < l.size()) l = span_basis(ann, m);
      if (!l.empty() && l.size() < current.size()) {
        smaller = std::move(l);
        return true;
      }
      return false;
    };
    auto consider_with_factors = [&](const Vec& y) {
      if (consider(y)) return true;
      for (const auto& w : factor_candidates(c, *c.one(), y, membership))
        if (consider(w)) return true;
      return false;
    };

    bool done = false;
    for (const auto& row : current)
      if ((done = consider_with_factors(row))) break;
    for (std::size_t h = 0; !done && h < opt.hints.size(); ++h)
      for (const auto& row : current)
        if ((done = consider_with_factors(multiply(c, opt.hints[h], row)))) break;
    long height = opt.initial_height;
    for (std::size_t round = 0; !done && round <= opt.height_doublings; ++round, height *= 2) {
      for (std::size_t t = 0; !done && t < opt.budget_per_level; ++t) {
        Vec coeffs(current.size());
        for (auto& x : coeffs) x = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * height + 1)) - height;
        Vec y = combine(current, coeffs, m);
        done = consider_with_factors(y);
        if (!done && !opt.hints.empty()) {
          Vec hc(opt.hints.size());
          for (auto& x : hc) x = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * height + 1)) - height;
          done = consider_with_factors(multiply(c, combine(opt.hints, hc, m), y));
        }
      }
    }
    if (!done) return std::nullopt;
    current = std::move(*smaller);
  }
  return current;
}

std::vector<Vec> matrix_units(const Algebra& c, const std::vector<Vec>& u, std::size_t q) {
  const std::size_t m = c.dim();
  if (u.size() != q || q * q != m) throw Error(ErrorKind::input, "matrix_units: expected q basis vectors in a q^2-dimensional algebra");
  MatrixQ phi(m, m);
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t k = 0; k < q; ++k) {
      auto coords = coordinates_in_basis(u, left_basis_multiply(c, t, u[k]));
      if (!coords) throw Error(ErrorKind::inconsistent, "matrix_units: U is not a left ideal");
      for (std::size_t i = 0; i < q; ++i) phi(i * q + k, t) = (*coords)[i];
    }
  MatrixQ inv;
  try {
    inv = invert(phi);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::singular) throw;
    throw Error(ErrorKind::inconsistent, "matrix_units: the action on U is not a full matrix algebra");
  }
  std::vector<Vec> units;
  for (std::size_t s = 0; s < m; ++s) units.push_back(inv.col(s));
  if (auto bad = check_matrix_units(c, units, q, c.one())) throw Error(ErrorKind::inconsistent, "matrix_units: " + *bad);
  return units;
}

std::optional<std::string> check_matrix_units(const Algebra& a, const std::vector<Vec>& units, std::size_t q,
                                              const std::optional<Vec>& identity) {
  if (units.size() != q * q) return "expected " + std::to_string(q * q) + " matrix units";
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t l = 0; l < q; ++l) {
          Vec p = multiply(a, units[i * q + j], units[k * q + l]);
          bool ok = j == k ? p == units[i * q + l] : is_zero(p);
          if (!ok) {
            return "E" + std::to_string(i + 1) + std::to_string(j + 1) + " E" + std::to_string(k + 1) +
                   std::to_string(l + 1) + " violates the unit relations";
          }
        }
  if (identity) {
    Vec sum(a.dim());
    for (std::size_t i = 0; i < q; ++i) sum = sum + units[i * q + i];
    if (sum != *identity) return "diagonal units do not sum to the component identity";
  }
  return std::nullopt;
}

std::vector<SimpleComponent> simple_components(const Algebra& qa, const std::vector<Vec>& idempotents,
                                               const std::vector<FieldComponent>& leaves, std::uint64_t seed) {
  std::vector<SimpleComponent> out;
  for (std::size_t k = 0; k < idempotents.size(); ++k) {
    SimpleComponent comp;
    comp.idempotent = idempotents[k];
    comp.basis = simple_ideal_basis(qa, comp.idempotent);
    comp.center_degree = k < leaves.size() ? leaves[k].degree() : 1;
    const std::size_t m = comp.basis.size();
    std::size_t q = 0;
    while ((q + 1) * (q + 1) <= m) ++q;

    if (k < leaves.size() && leaves[k].status == NodeStatus::unresolved) {
      comp.status = ComponentStatus::non_split;
      comp.note = "center of the component is unresolved";
    } else if (comp.center_degree > 1) {
      comp.status = ComponentStatus::non_split;
      comp.note = "center has degree " + std::to_string(comp.center_degree);
    } else if (q * q != m) {
      comp.status = ComponentStatus::non_split;
      comp.note = "dimension " + std::to_string(m) + " is not a square";
    } else {
      std::vector<std::size_t> piv = pivots_of(comp.basis);
      Algebra c = restrict_to_subalgebra(qa, comp.basis);
      c.set_one(rcf_coordinates(piv, comp.idempotent));
      LeftIdealSearch search;
      search.seed = seed ^ (0xD1B54A32D192ED03ULL * (k + 1));
      for (std::size_t j = 0; j < qa.dim(); ++j) {
        Vec h = rcf_coordinates(piv, left_basis_multiply(qa, j, comp.idempotent));
        if (!is_zero(h)) search.hints.push_back(std::move(h));
      }
      auto ideal = find_minimal_left_ideal(c, q, search);
      if (!ideal) {
        comp.status = ComponentStatus::search_failed;
        comp.note = "minimal left ideal not found";
      } else {
        std::vector<Vec> u_q;
        for (const auto& v : *ideal) u_q.push_back(combine(comp.basis, v, qa.dim()));
        comp.left_ideal = span_basis(u_q, qa.dim());
        std::vector<Vec> u_c;
        for (const auto& v : comp.left_ideal) u_c.push_back(rcf_coordinates(piv, v));
        try {
          for (const auto& e : matrix_units(c, u_c, q)) comp.units.push_back(combine(comp.basis, e, qa.dim()));
          comp.q = q;
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::inconsistent) throw;
          comp.status = ComponentStatus::non_split;
          comp.note = err.what();
          comp.units.clear();
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

Vec sparse_apply(const MatrixQ& m, const Vec& x, std::size_t row_begin, std::size_t row_end) {
  Vec y(row_end - row_begin);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = row_begin; i < row_end; ++i)
      if (sgn(m(i, j)) != 0) y[i - row_begin] += m(i, j) * x[j];
  }
  return y;
}

}  // namespace

RepresentationSet representations(const RadicalData& radical, const std::vector<SimpleComponent>& components,
                                  std::size_t count) {
  const Algebra& qa = radical.quotient.algebra;
  const std::size_t r = qa.dim();
  RepresentationSet rs;
  std::vector<Vec> cols;
  for (const auto& comp : components) {
    rs.offset.push_back(cols.size());
    const auto& block = comp.status == ComponentStatus::split ? comp.units : comp.basis;
    cols.insert(cols.end(), block.begin(), block.end());
  }
  if (cols.size() != r) {
    throw Error(ErrorKind::singular, "representations: component bases have total dimension " +
                                         std::to_string(cols.size()) + ", expected " + std::to_string(r));
  }
  rs.m = MatrixQ::from_columns(cols, r);
  rs.m_inv = invert(rs.m);
  rs.rep.resize(components.size());
  const std::size_t n = radical.quotient.ideal.dim;
  for (std::size_t i = 0; i < count; ++i) {
    Vec x = radical.quotient.project(unit_vec(n, i));
    for (std::size_t k = 0; k < components.size(); ++k) {
      if (components[k].status != ComponentStatus::split) continue;
      rs.rep[k].push_back(component_matrix(rs, components, k, x));
    }
  }
  return rs;
}

MatrixQ component_matrix(const RepresentationSet& reps, const std::vector<SimpleComponent>& components,
                         std::size_t k, const Vec& x) {
  const std::size_t q = components[k].q;
  Vec y = sparse_apply(reps.m_inv, x, reps.offset[k], reps.offset[k] + q * q);
  MatrixQ out(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) out(i, j) = y[i * q + j];
  return out;
}

}  // namespace wdec
