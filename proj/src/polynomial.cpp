#include "wdec/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "wdec/error.hpp"

namespace wdec {

Polynomial::Polynomial(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(Vec{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  Vec v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial(Vec{Rational(-root), Rational(1)}); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / c_.back();
  return inv * *this;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  Vec d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Vec r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Vec r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vec r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Vec r = p.c_;
  for (auto& x : r) x *= s;
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << wdec::to_string(mag);
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorKind::input, "polynomial division by zero");
  Vec r = f.coeffs();
  const std::size_t dg = g.coeffs().size() - 1;
  if (r.size() <= dg) return {Polynomial{}, f};
  Vec q(r.size() - dg);
  Rational inv = 1 / g.leading();
  for (std::size_t i = r.size(); i-- > dg;) {
    if (sgn(r[i]) == 0) continue;
    Rational c = r[i] * inv;
    q[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] -= c * g.coeffs()[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::input, "gcd(0, 0) is undefined");
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

ExtendedGcd poly_ext_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::input, "gcd(0, 0) is undefined");
  Polynomial r0 = f, r1 = g;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

bool factor_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
  }
  return false;
}

std::vector<PolyFactor> squarefree_decomposition(const Polynomial& f) {
  if (f.degree() < 1) return {};
  Polynomial a = f.monic();
  Polynomial c = poly_gcd(a, a.derivative());
  Polynomial w = divmod(a, c).first;
  std::vector<PolyFactor> out;
  std::size_t i = 1;
  while (c.degree() > 0) {
    Polynomial y = poly_gcd(w, c);
    Polynomial z = divmod(w, y).first;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (w.degree() > 0) out.push_back({w.monic(), i});
  return out;
}

namespace {

using IntPoly = std::vector<Integer>;

// Primitive integer multiple of p with positive leading coefficient.
IntPoly primitive_part(const Polynomial& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
  IntPoly out;
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    g = gcd(g, v);
    out.push_back(v);
  }
  if (sgn(p.leading()) < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

Polynomial to_poly(const IntPoly& p) {
  Vec v;
  for (const auto& c : p) v.emplace_back(c);
  return Polynomial(std::move(v));
}

Integer eval_int(const IntPoly& p, const Integer& x) {
  Integer r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  if (n == 0) throw Error(ErrorKind::internal, "divisors of zero requested");
  if (n > Integer("100000000000000")) {
    throw Error(ErrorKind::degree_cap, "coefficient too large for divisor enumeration");
  }
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int sign_at_half(const IntPoly& p, const Integer& k) {
  // sign of p((2k + 1) / 2) * 2^deg
  const Integer x = 2 * k + 1;
  Integer r = 0, pow2 = 1;
  for (std::size_t i = p.size(); i-- > 0;) {
    r = r * x + p[i] * pow2;
    pow2 *= 2;
  }
  return sgn(r);
}

// Sturm sequence of a square-free polynomial, each term scaled to a
// primitive integer polynomial by a positive factor.
std::vector<IntPoly> sturm_sequence(const IntPoly& g) {
  auto positive_primitive = [](const Polynomial& q) {
    IntPoly v = primitive_part(q);
    if (sgn(q.leading()) < 0)
      for (auto& c : v) c = -c;
    return v;
  };
  std::vector<IntPoly> seq{g};
  Polynomial prev = to_poly(g), cur = prev.derivative();
  while (!cur.is_zero()) {
    seq.push_back(positive_primitive(cur));
    Polynomial rem = divmod(prev, cur).second;
    prev = cur;
    cur = Rational(-1) * rem;
  }
  return seq;
}

std::size_t sign_changes_at_half(const std::vector<IntPoly>& seq, const Integer& k) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_at_half(p, k);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Integer roots of a monic square-free integer polynomial.  Rational roots of
// such a polynomial are integers, so no half-integer is a root and Sturm
// counts on (k + 1/2, l + 1/2] isolate them by bisection.
std::vector<Integer> integer_roots(const IntPoly& g) {
  Integer bound = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) bound = std::max(bound, Integer(abs(g[i])));
  bound += 1;
  const auto seq = sturm_sequence(g);
  std::vector<Integer> roots;
  struct Range {
    Integer lo, hi;  // (lo + 1/2, hi + 1/2]
    std::size_t vlo, vhi;
  };
  std::vector<Range> stack{{-bound - 1, bound, sign_changes_at_half(seq, -bound - 1), sign_changes_at_half(seq, bound)}};
  while (!stack.empty()) {
    Range r = stack.back();
    stack.pop_back();
    if (r.vlo == r.vhi) continue;
    if (r.hi - r.lo == 1) {
      if (eval_int(g, r.hi) == 0) roots.push_back(r.hi);
      continue;
    }
    Integer mid = r.lo + (r.hi - r.lo) / 2;
    std::size_t vmid = sign_changes_at_half(seq, mid);
    stack.push_back({mid, r.hi, vmid, r.vhi});
    stack.push_back({r.lo, mid, r.vlo, vmid});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Monic linear factors of a primitive square-free integer polynomial; `p` is
// replaced by the cofactor.
std::vector<Polynomial> extract_rational_roots(IntPoly& p) {
  std::vector<Polynomial> roots;
  if (p.size() <= 1) return roots;
  // y = a t turns a t^n + ... into a monic integer polynomial in y
  const Integer a = p.back();
  const std::size_t n = p.size() - 1;
  IntPoly g(p.size());
  Integer scale = 1;
  for (std::size_t i = n; i-- > 0;) {
    g[i] = p[i] * scale;
    scale *= a;
  }
  g[n] = 1;
  Polynomial rest = to_poly(p);
  for (const auto& y : integer_roots(g)) {
    Rational r(y, a);
    r.canonicalize();
    roots.push_back(Polynomial::linear(r));
    rest = divmod(rest, Polynomial::linear(r)).first;
  }
  p = primitive_part(rest);
  return roots;
}

// Irreducible factors of a primitive, square-free integer polynomial without
// rational roots.
void kronecker(const IntPoly& p, const FactorOptions& opt, std::vector<Polynomial>& out) {
  const std::size_t deg = p.size() - 1;
  if (deg <= 3) {
    out.push_back(to_poly(p).monic());
    return;
  }
  if (deg > opt.kronecker_max_degree) {
    throw Error(ErrorKind::degree_cap, "Kronecker factorisation: residual " + to_poly(p).to_string() +
                                           " exceeds degree cap " + std::to_string(opt.kronecker_max_degree));
  }
  const Polynomial whole = to_poly(p);
  for (std::size_t d = 2; d <= deg / 2; ++d) {
    // Pick d+1 evaluation points whose values have the fewest divisors.
    struct Point {
      Integer x;
      std::vector<Integer> divisors;
    };
    std::vector<Point> pts;
    for (long k = 0; static_cast<std::size_t>(pts.size()) < 4 * d + 4; ++k) {
      long x = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
      Integer v = eval_int(p, Integer(x));
      pts.push_back({Integer(x), positive_divisors(v)});
    }
    std::stable_sort(pts.begin(), pts.end(),
                     [](const Point& a, const Point& b) { return a.divisors.size() < b.divisors.size(); });
    pts.resize(d + 1);

    std::size_t total = 1;
    for (std::size_t i = 0; i <= d; ++i) {
      std::size_t options = pts[i].divisors.size() * (i == 0 ? 1 : 2);
      if (total > opt.kronecker_budget / options) {
        throw Error(ErrorKind::degree_cap, "Kronecker factorisation: search budget exceeded for " + whole.to_string());
      }
      total *= options;
    }

    // Lagrange basis polynomials.
    std::vector<Polynomial> basis(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      Polynomial l = Polynomial::constant(1);
      Rational denom = 1;
      for (std::size_t k = 0; k <= d; ++k) {
        if (k == i) continue;
        l = l * Polynomial::linear(Rational(pts[k].x));
        denom *= Rational(pts[i].x - pts[k].x);
      }
      basis[i] = (1 / denom) * l;
    }

    std::vector<std::size_t> choice(d + 1, 0);
    for (std::size_t step = 0; step < total; ++step) {
      Polynomial h;
      for (std::size_t i = 0; i <= d; ++i) {
        std::size_t nd = pts[i].divisors.size();
        std::size_t c = choice[i];
        Integer v = pts[i].divisors[c % nd];
        if (c >= nd) v = -v;
        h = h + Rational(v) * basis[i];
      }
      bool integral = h.degree() == static_cast<long>(d);
      for (const auto& c : h.coeffs()) integral = integral && c.get_den() == 1;
      if (integral) {
        auto [q, r] = divmod(whole, h);
        if (r.is_zero()) {
          kronecker(primitive_part(h), opt, out);
          kronecker(primitive_part(q), opt, out);
          return;
        }
      }
      for (std::size_t i = 0; i <= d; ++i) {
        std::size_t limit = pts[i].divisors.size() * (i == 0 ? 1 : 2);
        if (++choice[i] < limit) break;
        choice[i] = 0;
      }
    }
  }
  out.push_back(whole.monic());
}

}  // namespace

Factorization factor_over_Q(const Polynomial& f, const FactorOptions& opt) {
  if (f.degree() < 1) throw Error(ErrorKind::input, "factor_over_Q: degree must be at least 1");
  Factorization fac;
  fac.unit = f.leading();
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    IntPoly p = primitive_part(part);
    std::vector<Polynomial> irreducible = extract_rational_roots(p);
    if (p.size() > 1) kronecker(p, opt, irreducible);
    for (auto& g : irreducible) fac.factors.push_back({g.monic(), mult});
  }
  std::sort(fac.factors.begin(), fac.factors.end(),
            [](const PolyFactor& a, const PolyFactor& b) { return factor_less(a.poly, b.poly); });
  return fac;
}

bool is_irreducible(const Factorization& fac) {
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace wdec
