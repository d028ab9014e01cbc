#include "wdec/rational.hpp"

#include <cctype>

#include "wdec/error.hpp"

namespace wdec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::input: return "input";
    case ErrorKind::singular: return "singular";
    case ErrorKind::inconsistent: return "inconsistent";
    case ErrorKind::not_closed: return "not closed";
    case ErrorKind::not_associative: return "not associative";
    case ErrorKind::not_an_ideal: return "not an ideal";
    case ErrorKind::too_large: return "too large";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::degree_cap: return "degree cap exceeded";
    case ErrorKind::unresolved: return "unresolved";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::input, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::input, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

void axpy(Vec& y, const Rational& a, const Vec& x) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  }
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(r, Rational(1), b);
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(r, Rational(-1), b);
  return r;
}

Vec operator*(const Rational& a, const Vec& v) {
  Vec r(v.size());
  if (sgn(a) == 0) return r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) r[i] = a * v[i];
  }
  return r;
}

std::size_t leading_index(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) return i;
  }
  return v.size();
}

std::size_t trailing_index(const Vec& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (sgn(v[i]) != 0) return i;
  }
  return v.size();
}

Vec primitive_integer_form(const Vec& v) {
  Integer den = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) den = lcm(den, Integer(x.get_den()));
  }
  Integer g = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) g = gcd(g, Integer(x.get_num() * (den / x.get_den())));
  }
  Vec r(v.size());
  if (g == 0) return r;
  std::size_t lead = leading_index(v);
  if (sgn(v[lead]) < 0) g = -g;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) r[i] = Rational(v[i].get_num() * (den / v[i].get_den()) / g);
  }
  return r;
}

std::vector<std::string> to_strings(const Vec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vec parse_vec(const std::vector<std::string>& items) {
  Vec v;
  v.reserve(items.size());
  for (const auto& s : items) v.push_back(parse_rational(s));
  return v;
}

}  // namespace wdec
