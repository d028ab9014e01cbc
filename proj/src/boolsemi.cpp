#include "wdec/boolsemi.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "wdec/error.hpp"

namespace wdec {

BoolMatrix::BoolMatrix(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n > max_size) throw Error(ErrorKind::input, "BoolMatrix supports n <= 8");
  if (n < max_size && (bits >> (n * n)) != 0) throw Error(ErrorKind::input, "BoolMatrix bits out of range");
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BoolMatrix BoolMatrix::parse(std::string_view text) {
  std::vector<std::string> rows(1);
  for (char c : text) {
    if (c == '/' || c == '\n') {
      if (!rows.back().empty()) rows.emplace_back();
    } else if (c == '0' || c == '1') {
      rows.back().push_back(c);
    } else if (c != ' ') {
      throw Error(ErrorKind::input, "BoolMatrix::parse: unexpected character");
    }
  }
  if (rows.back().empty()) rows.pop_back();
  const std::size_t n = rows.size();
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::input, "BoolMatrix::parse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j] == '1');
  }
  return m;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (i * n_ + j);
  bits_ = v ? (bits_ | bit) : (bits_ & ~bit);
}

std::size_t BoolMatrix::row_count(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t j = 0; j < n_; ++j) c += get(i, j);
  return c;
}

std::size_t BoolMatrix::col_count(std::size_t j) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n_; ++i) c += get(i, j);
  return c;
}

std::string BoolMatrix::bit_string() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s.push_back(get(i, j) ? '1' : '0');
  return s;
}

std::string BoolMatrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s.push_back('/');
    for (std::size_t j = 0; j < n_; ++j) s.push_back(get(i, j) ? '1' : '0');
  }
  return s;
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::input, "bool_product: size mismatch");
  const std::size_t n = a.size();
  BoolMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (b.get(j, k)) c.set(i, k, true);
    }
  return c;
}

Family parse_family(std::string_view name) {
  if (name == "sym") return Family::sym;
  if (name == "si") return Family::si;
  if (name == "ft") return Family::ft;
  if (name == "pt") return Family::pt;
  if (name == "hall") return Family::hall;
  if (name == "qp") return Family::qp;
  if (name == "b") return Family::b;
  throw Error(ErrorKind::input, "unknown family '" + std::string(name) + "'");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::sym: return "sym";
    case Family::si: return "si";
    case Family::ft: return "ft";
    case Family::pt: return "pt";
    case Family::hall: return "hall";
    case Family::qp: return "qp";
    case Family::b: return "b";
  }
  return "?";
}

namespace {

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::uint64_t binom(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Key whose numeric order equals lexicographic order of bit_string().
std::uint64_t lex_key(const BoolMatrix& m) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) key = (key << 1) | (m.get(i, j) ? 1u : 0u);
  return key;
}

bool contains_permutation(const BoolMatrix& m) {
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < m.size() && ok; ++i) ok = m.get(i, p[i]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool is_quasipermutation(const BoolMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.row_count(i) == 0 || m.col_count(i) == 0) return false;
  return true;
}

// Column j maps to row choice[j] (n means "no 1 in this column").
void enumerate_column_maps(std::size_t n, bool allow_empty, bool injective, std::vector<BoolMatrix>& out) {
  const std::size_t options = allow_empty ? n + 1 : n;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    bool ok = true;
    if (injective) {
      std::vector<bool> used(n, false);
      for (auto r : choice) {
        if (r == n) continue;
        if (used[r]) { ok = false; break; }
        used[r] = true;
      }
    }
    if (ok) {
      BoolMatrix m(n);
      for (std::size_t j = 0; j < n; ++j)
        if (choice[j] < n) m.set(choice[j], j, true);
      out.push_back(m);
    }
    std::size_t pos = 0;
    while (pos < n && ++choice[pos] == options) choice[pos++] = 0;
    if (pos == n) break;
  }
}

}  // namespace

std::optional<std::uint64_t> family_order(Family family, std::size_t n) {
  switch (family) {
    case Family::sym: return factorial(n);
    case Family::si: {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i <= n; ++i) s += binom(n, i) * binom(n, i) * factorial(i);
      return s;
    }
    case Family::ft: return ipow(n, n);
    case Family::pt: return ipow(n + 1, n);
    case Family::hall: return std::nullopt;
    case Family::qp: {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        auto term = static_cast<std::int64_t>(binom(n, k) * ipow(ipow(2, n - k) - 1, n));
        s += (k % 2 == 0) ? term : -term;
      }
      return static_cast<std::uint64_t>(s);
    }
    case Family::b: return n * n >= 64 ? std::nullopt : std::optional<std::uint64_t>(ipow(2, n * n));
  }
  return std::nullopt;
}

std::vector<BoolMatrix> generate(Family family, std::size_t n, const GenerateOptions& opt) {
  if (n < 1 || n > BoolMatrix::max_size) throw Error(ErrorKind::input, "generate: n must be in 1..8");
  std::uint64_t candidates = 0;
  switch (family) {
    case Family::sym: candidates = factorial(n); break;
    case Family::si:
    case Family::pt: candidates = ipow(n + 1, n); break;
    case Family::ft: candidates = ipow(n, n); break;
    case Family::hall:
    case Family::qp:
    case Family::b: candidates = n * n >= 63 ? UINT64_MAX : ipow(2, n * n); break;
  }
  if (candidates > opt.budget) {
    throw Error(ErrorKind::too_large, std::string("generate: ") + family_name(family) + " n=" +
                                          std::to_string(n) + " exceeds the enumeration budget");
  }

  std::vector<BoolMatrix> out;
  switch (family) {
    case Family::sym: {
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      do {
        BoolMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, p[i], true);
        out.push_back(m);
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case Family::si: enumerate_column_maps(n, true, true, out); break;
    case Family::ft: enumerate_column_maps(n, false, false, out); break;
    case Family::pt: enumerate_column_maps(n, true, false, out); break;
    case Family::hall:
    case Family::qp:
    case Family::b:
      for (std::uint64_t bits = 0; bits < candidates; ++bits) {
        BoolMatrix m(n, bits);
        if (family == Family::hall && !contains_permutation(m)) continue;
        if (family == Family::qp && !is_quasipermutation(m)) continue;
        out.push_back(m);
      }
      break;
  }
  std::sort(out.begin(), out.end(),
            [](const BoolMatrix& a, const BoolMatrix& b) { return lex_key(a) < lex_key(b); });
  return out;
}

std::vector<BoolMatrix> pt2_reference_order() {
  return {BoolMatrix::parse("00/00"), BoolMatrix::parse("10/00"), BoolMatrix::parse("01/00"),
          BoolMatrix::parse("00/10"), BoolMatrix::parse("00/01"), BoolMatrix::parse("11/00"),
          BoolMatrix::parse("10/01"), BoolMatrix::parse("01/10"), BoolMatrix::parse("00/11")};
}

MultiplicationTable table_of(const std::vector<BoolMatrix>& elements) {
  const std::size_t m = elements.size();
  if (m > 8192) throw Error(ErrorKind::too_large, "table_of: more than 8192 elements");
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) {
    if (elements[i].size() != elements[0].size()) throw Error(ErrorKind::input, "table_of: mixed sizes");
    index.emplace(elements[i].bits(), i);
  }
  if (index.size() != m) throw Error(ErrorKind::input, "table_of: repeated element");
  MultiplicationTable t{m, std::vector<std::size_t>(m * m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto it = index.find(bool_product(elements[i], elements[j]).bits());
      if (it == index.end()) {
        throw Error(ErrorKind::not_closed, "table_of: product of elements " + std::to_string(i + 1) + " and " +
                                               std::to_string(j + 1) + " is not in the list");
      }
      t.mu[i * m + j] = it->second;
    }
  }
  return t;
}

std::optional<std::array<std::size_t, 3>> find_table_associativity_violation(const MultiplicationTable& t) {
  const std::size_t m = t.order;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t ij = t(i, j);
      for (std::size_t k = 0; k < m; ++k)
        if (t(ij, k) != t(i, t(j, k))) return std::array<std::size_t, 3>{i, j, k};
    }
  return std::nullopt;
}

std::optional<std::size_t> table_identity(const MultiplicationTable& t) {
  for (std::size_t e = 0; e < t.order; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < t.order && ok; ++j) ok = t(e, j) == j && t(j, e) == j;
    if (ok) return e;
  }
  return std::nullopt;
}

Algebra semigroup_algebra(const MultiplicationTable& t) {
  if (auto w = find_table_associativity_violation(t)) {
    throw Error(ErrorKind::not_associative, "table is not associative at (" + std::to_string((*w)[0] + 1) + ", " +
                                                std::to_string((*w)[1] + 1) + ", " +
                                                std::to_string((*w)[2] + 1) + ")");
  }
  const std::size_t m = t.order;
  Algebra a(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      SparseRow r;
      r.idx.push_back(t(i, j));
      r.val.push_back(Rational(1));
      a.set_product(i, j, std::move(r));
    }
  if (auto e = table_identity(t)) a.set_one(unit_vec(m, *e));
  return a;
}

MultiplicationTable adjoin_table_identity(const MultiplicationTable& t) {
  const std::size_t m = t.order;
  MultiplicationTable u{m + 1, std::vector<std::size_t>((m + 1) * (m + 1))};
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= m; ++j) {
      std::size_t v;
      if (i == m) v = j;
      else if (j == m) v = i;
      else v = t(i, j);
      u.mu[i * (m + 1) + j] = v;
    }
  return u;
}

}  // namespace wdec
