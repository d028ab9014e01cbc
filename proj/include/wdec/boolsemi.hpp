#ifndef WDEC_BOOLSEMI_HPP
#define WDEC_BOOLSEMI_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wdec/algebra.hpp"

namespace wdec {

// n x n zero-one matrix, n <= 8, bit (i, j) at position i * n + j.
class BoolMatrix {
 public:
  static constexpr std::size_t max_size = 8;

  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n, std::uint64_t bits = 0);
  static BoolMatrix identity(std::size_t n);
  // Rows of '0'/'1' characters separated by '/', e.g. "10/01".
  static BoolMatrix parse(std::string_view text);

  std::size_t size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool get(std::size_t i, std::size_t j) const { return (bits_ >> (i * n_ + j)) & 1u; }
  void set(std::size_t i, std::size_t j, bool v);

  std::size_t row_count(std::size_t i) const;
  std::size_t col_count(std::size_t j) const;

  // Row-major string of 0/1 characters; the canonical ordering of a family
  // is lexicographic on this string.
  std::string bit_string() const;
  std::string to_string() const;  // rows separated by '/'

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

// (a o b)_ik = 1 iff a_ij = b_jk = 1 for some j.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);

enum class Family { sym, si, ft, pt, hall, qp, b };

Family parse_family(std::string_view name);
const char* family_name(Family f);

struct GenerateOptions {
  // Maximum number of candidate matrices examined.
  std::uint64_t budget = std::uint64_t{1} << 22;
};

// All members of the family, in lexicographic order of bit_string().
std::vector<BoolMatrix> generate(Family family, std::size_t n, const GenerateOptions& opt = {});

// Closed-form orders where known (everything but hall).
std::optional<std::uint64_t> family_order(Family family, std::size_t n);

// PT_2 as listed in the worked example, in that order (0-based a_1..a_9).
std::vector<BoolMatrix> pt2_reference_order();

struct MultiplicationTable {
  std::size_t order = 0;
  std::vector<std::size_t> mu;  // 0-based, row-major order x order

  std::size_t operator()(std::size_t i, std::size_t j) const { return mu[i * order + j]; }
};

// Throws Error(not_closed) naming the first pair whose product is missing.
MultiplicationTable table_of(const std::vector<BoolMatrix>& elements);

std::optional<std::array<std::size_t, 3>> find_table_associativity_violation(const MultiplicationTable& t);

// Index e with mu(e, j) = j = mu(j, e) for all j.
std::optional<std::size_t> table_identity(const MultiplicationTable& t);

// c_ij^k = [k = mu(i,j)]; the identity is recorded when present.  Throws
// Error(not_associative) with a witness triple.
Algebra semigroup_algebra(const MultiplicationTable& t);

// Table of the monoid obtained by adjoining a new identity as last element.
MultiplicationTable adjoin_table_identity(const MultiplicationTable& t);

}  // namespace wdec

#endif  // WDEC_BOOLSEMI_HPP
