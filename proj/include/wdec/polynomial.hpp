#ifndef WDEC_POLYNOMIAL_HPP
#define WDEC_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wdec/rational.hpp"

namespace wdec {

// Univariate polynomial over Q, constant term first, no trailing zeros; the
// zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vec coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  // t - root
  static Polynomial linear(const Rational& root);

  const Vec& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const;
  Polynomial monic() const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  Vec c_;
};

// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);

// Monic gcd; gcd(0, 0) is rejected.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

struct ExtendedGcd {
  Polynomial gcd;  // monic
  Polynomial s;    // s*f + t*g = gcd
  Polynomial t;
};
ExtendedGcd poly_ext_gcd(const Polynomial& f, const Polynomial& g);

struct PolyFactor {
  Polynomial poly;  // monic irreducible
  std::size_t multiplicity;
};

struct Factorization {
  Rational unit;                   // leading coefficient of the input
  std::vector<PolyFactor> factors; // ordered by degree, then coefficients from the constant term
};

// Square-free decomposition: f / lc(f) = prod_i a_i^i with a_i square-free,
// pairwise coprime.  Entries with a_i = 1 are omitted.
std::vector<PolyFactor> squarefree_decomposition(const Polynomial& f);

struct FactorOptions {
  std::size_t kronecker_max_degree = 8;
  // Candidate divisor tuples tried per factor degree before giving up.
  std::size_t kronecker_budget = 2'000'000;
};

// Complete factorisation over Q: square-free decomposition, rational roots,
// then Kronecker's interpolation search.  Throws Error(degree_cap) when a
// residual factor exceeds the degree cap or the search budget.
Factorization factor_over_Q(const Polynomial& f, const FactorOptions& opt = {});

bool is_irreducible(const Factorization& fac);

// Order used for factor lists: degree, then coefficients lexicographically
// from the constant term.
bool factor_less(const Polynomial& a, const Polynomial& b);

}  // namespace wdec

#endif  // WDEC_POLYNOMIAL_HPP
