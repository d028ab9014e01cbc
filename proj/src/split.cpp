#include "wdec/split.hpp"

#include <random>

#include "wdec/center.hpp"
#include "wdec/error.hpp"

namespace wdec {

const char* to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::split_pending: return "split-pending";
    case NodeStatus::field_q: return "field-Q";
    case NodeStatus::field_extension: return "field-extension";
    case NodeStatus::unresolved: return "unresolved";
  }
  return "?";
}

Polynomial minimal_polynomial(const Algebra& f, const Vec& e, const Vec& u) {
  std::vector<Vec> powers{e};
  Vec p = u;
  for (std::size_t k = 1; k <= f.dim() + 1; ++k) {
    if (auto c = coordinates_in_basis(powers, p)) {
      Vec coeffs(k + 1);
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*c)[j];
      coeffs[k] = 1;
      return Polynomial(std::move(coeffs));
    }
    powers.push_back(p);
    p = multiply(f, p, u);
  }
  throw Error(ErrorKind::internal, "minimal_polynomial: no dependence found");
}

Vec evaluate_at(const Algebra& f, const Polynomial& p, const Vec& e, const Vec& u) {
  Vec acc(f.dim());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = multiply(f, acc, u);
    axpy(acc, p.coeffs()[i], e);
  }
  return acc;
}

std::vector<Vec> ideal_basis_from_generator(const Algebra& f, const Vec& u) {
  std::vector<Vec> products;
  products.reserve(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) products.push_back(left_basis_multiply(f, i, u));
  return span_basis(products, f.dim());
}

Vec ideal_identity(const Algebra& f, const std::vector<Vec>& basis) {
  const std::size_t c = f.dim();
  const std::size_t d = basis.size();
  MatrixQ sys(c * d, d);
  Vec rhs(c * d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t h = 0; h < d; ++h) {
      Vec prod = multiply(f, basis[h], basis[k]);
      for (std::size_t i = 0; i < c; ++i) sys(k * c + i, h) = prod[i];
    }
    for (std::size_t i = 0; i < c; ++i) rhs[k * c + i] = basis[k][i];
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw Error(ErrorKind::inconsistent, "ideal_identity: no identity element in the given span");
  Vec e(c);
  for (std::size_t h = 0; h < d; ++h) axpy(e, sol->particular[h], basis[h]);
  return e;
}

bool SplitResult::resolved() const {
  for (const auto& c : components)
    if (c.status == NodeStatus::unresolved) return false;
  return true;
}

std::vector<Vec> SplitResult::idempotents() const {
  std::vector<Vec> out;
  for (const auto& c : components) out.push_back(c.idempotent);
  return out;
}

namespace {

bool is_scalar_multiple(const Vec& v, const Vec& e) {
  std::size_t i = leading_index(e);
  if (i == e.size()) return is_zero(v);
  Rational s = v[i] / e[i];
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != s * e[k]) return false;
  return true;
}

class Splitter {
 public:
  Splitter(const Algebra& f, const SplitOptions& opt) : f_(f), opt_(opt) {}

  void run(std::vector<Vec> basis, const Vec& e) {
    if (basis.size() == 1) {
      const Vec& w = basis[0];
      Vec sq = multiply(f_, w, w);
      std::size_t lead = leading_index(w);
      Rational lambda = sq[lead] / w[lead];
      if (is_zero(lambda) || sq != lambda * w) {
        throw Error(ErrorKind::internal, "split: one-dimensional ideal is not a field");
      }
      FieldComponent leaf;
      leaf.idempotent = (1 / lambda) * w;
      leaf.basis = std::move(basis);
      leaf.status = NodeStatus::field_q;
      leaf.min_poly = Polynomial::linear(1);
      out_.components.push_back(std::move(leaf));
      return;
    }

    std::vector<Vec> candidates;
    for (const auto& v : basis)
      if (!is_scalar_multiple(v, e)) candidates.push_back(v);

    auto leaf = [&](NodeStatus status, Polynomial p, std::string note) {
      FieldComponent c;
      c.basis = basis;
      c.idempotent = e;
      c.status = status;
      c.min_poly = std::move(p);
      c.note = std::move(note);
      out_.components.push_back(std::move(c));
    };

    std::string failure = "primitive element search exhausted its trial budget";
    std::mt19937_64 rng(opt_.seed ^ (0x9E3779B97F4A7C15ULL * (leading_index(basis[0]) + 1)));
    for (std::size_t trial = 0; trial < candidates.size() + opt_.primitive_trials; ++trial) {
      Vec v;
      if (trial < candidates.size()) {
        v = candidates[trial];
      } else {
        std::size_t r = trial - candidates.size();
        long h = 1L << std::min<std::size_t>(r / 16, 20);
        v.assign(f_.dim(), Rational(0));
        for (const auto& b : basis) {
          long c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * h + 1)) - h;
          if (c != 0) axpy(v, Rational(c), b);
        }
        if (is_scalar_multiple(v, e)) continue;
      }
      Polynomial p = minimal_polynomial(f_, e, v);
      if (poly_gcd(p, p.derivative()).degree() > 0) {
        throw Error(ErrorKind::internal, "split: minimal polynomial " + p.to_string() + " is not square-free");
      }
      Factorization fac;
      try {
        fac = factor_over_Q(p, FactorOptions{opt_.kronecker_max_degree, FactorOptions{}.kronecker_budget});
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::degree_cap) throw;
        failure = err.what();
        continue;
      }
      if (fac.factors.size() > 1) {
        const Polynomial& g = fac.factors[0].poly;
        Polynomial h = divmod(p, g).first;
        std::vector<Vec> j = ideal_basis_from_generator(f_, evaluate_at(f_, g, e, v));
        std::vector<Vec> k = ideal_basis_from_generator(f_, evaluate_at(f_, h, e, v));
        if (j.size() + k.size() != basis.size()) throw Error(ErrorKind::internal, "split: J + K does not span I");
        Vec ej = ideal_identity(f_, j);
        Vec ek = ideal_identity(f_, k);
        run(std::move(j), ej);
        run(std::move(k), ek);
        return;
      }
      if (static_cast<std::size_t>(p.degree()) == basis.size()) {
        leaf(NodeStatus::field_extension, p, "");
        return;
      }
    }
    leaf(NodeStatus::unresolved, Polynomial{}, failure);
  }

  SplitResult take() { return std::move(out_); }

 private:
  const Algebra& f_;
  const SplitOptions& opt_;
  SplitResult out_;
};

}  // namespace

SplitResult split_to_idempotents(const Algebra& f, const Vec& identity, const SplitOptions& opt) {
  if (identity.size() != f.dim()) throw Error(ErrorKind::input, "split: identity has wrong length");
  Splitter s(f, opt);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < f.dim(); ++i) basis.push_back(unit_vec(f.dim(), i));
  if (!basis.empty()) s.run(std::move(basis), identity);
  return s.take();
}

}  // namespace wdec
