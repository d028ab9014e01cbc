#ifndef WDEC_RATIONAL_HPP
#define WDEC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wdec {

// GMP keeps mpq_class canonical after every arithmetic operation:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

// Coefficient vector over some fixed basis. Elements of every algebra in the
// pipeline are carried this way.
using Vec = std::vector<Rational>;

// "p/q", or "p" when q = 1; the sign lives on the numerator.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q", "-p/q" with q > 0 and returns the reduced value.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
bool is_zero(const Vec& v);

Vec unit_vec(std::size_t n, std::size_t i);

// y += a * x
void axpy(Vec& y, const Rational& a, const Vec& x);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& a, const Vec& v);

// Index of the first / last nonzero entry, or v.size() when v = 0.
std::size_t leading_index(const Vec& v);
std::size_t trailing_index(const Vec& v);

// Multiplies v by the lcm of its denominators and divides by the gcd of the
// resulting numerators, keeping the sign of the leading entry positive.
Vec primitive_integer_form(const Vec& v);

std::vector<std::string> to_strings(const Vec& v);
Vec parse_vec(const std::vector<std::string>& items);

}  // namespace wdec

#endif  // WDEC_RATIONAL_HPP
