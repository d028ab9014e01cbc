#ifndef WDEC_ALGEBRA_HPP
#define WDEC_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdec/echelon.hpp"
#include "wdec/matrix.hpp"
#include "wdec/rational.hpp"

namespace wdec {

// Finite-dimensional associative algebra over Q given by structure constants
// a_i a_j = sum_k c_ij^k a_k.  Indices are 0-based in memory and 1-based in
// every external format.  Elements are coefficient vectors (Vec) of length
// dim().
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::size_t dim);

  std::size_t dim() const { return dim_; }

  // c_ij^. as a sparse row over k.
  const SparseRow& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  void set_product(std::size_t i, std::size_t j, SparseRow row);
  // Adds c to c_ij^k.
  void add_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& c);

  const std::optional<Vec>& one() const { return one_; }
  void set_one(std::optional<Vec> one);

  const std::optional<std::vector<std::string>>& labels() const { return labels_; }
  void set_labels(std::optional<std::vector<std::string>> labels);

  // Number of stored nonzero structure constants.
  std::size_t nnz() const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  std::size_t dim_ = 0;
  std::vector<SparseRow> table_;
  std::optional<Vec> one_;
  std::optional<std::vector<std::string>> labels_;
};

Vec basis_element(const Algebra& a, std::size_t i);

// Bilinear extension of the structure constants.
Vec multiply(const Algebra& a, const Vec& x, const Vec& y);
Vec left_basis_multiply(const Algebra& a, std::size_t i, const Vec& y);   // a_i * y
Vec right_basis_multiply(const Algebra& a, const Vec& x, std::size_t j);  // x * a_j

// Column j holds x * a_j.
MatrixQ left_mult_matrix(const Algebra& a, const Vec& x);
// Column i holds a_i * x.
MatrixQ right_mult_matrix(const Algebra& a, const Vec& x);

// New basis element (last index) acting as identity; `one` points at it.
Algebra adjoin_identity(const Algebra& a);

// Solves one*a_i = a_i = a_i*one.  Returns the (unique) identity if it exists.
std::optional<Vec> find_identity(const Algebra& a);
bool is_identity(const Algebra& a, const Vec& one);

enum class AssocMode { automatic, exhaustive, sampled, off };

struct AssocOptions {
  AssocMode mode = AssocMode::automatic;
  std::size_t exhaustive_max_dim = 64;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

// First triple (0-based) with (a_i a_j) a_k != a_i (a_j a_k), if any is found.
std::optional<std::array<std::size_t, 3>> find_associativity_violation(const Algebra& a,
                                                                      const AssocOptions& opt = {});

enum class ClosureMode { left_ideal, right_ideal, two_sided, subalgebra };

// RCF basis of the smallest subspace containing the generators and closed
// under the requested multiplications.
std::vector<Vec> subspace_closure(const Algebra& a, const std::vector<Vec>& generators, ClosureMode mode);

// RCF rows of an ideal, split into leading columns L and complement M.
// sigma[h][k] is the coefficient of a_{m_k} in reduced row h, so that modulo
// the ideal a_{l_h} = -sum_k sigma[h][k] a_{m_k}.
struct ReducedIdealBasis {
  std::size_t dim = 0;
  std::vector<Vec> rows;
  std::vector<std::size_t> leading;     // L, increasing
  std::vector<std::size_t> complement;  // M, increasing
  std::vector<Vec> sigma;               // |L| x |M|

  // Coordinates of x + I over the cosets of a_{m_1}, ..., a_{m_r}.
  Vec project(const Vec& x) const;
  SparseRow project(const SparseRow& x) const;
  // Canonical preimage: the element supported on M with the given coordinates.
  Vec lift(const Vec& coset_coords) const;
};

ReducedIdealBasis reduce_ideal_basis(const std::vector<Vec>& ideal_vectors, std::size_t dim);

enum class IdealCheck { off, automatic, exhaustive, sampled };

struct Quotient {
  Algebra algebra;
  ReducedIdealBasis ideal;

  Vec project(const Vec& x) const { return ideal.project(x); }
};

// Structure constants d_ij^k of A/I on the basis {a_m + I : m in M}.  When a
// check is requested and the span is not a two-sided ideal, throws
// Error(not_an_ideal).
Quotient quotient_by_ideal(const Algebra& a, const std::vector<Vec>& ideal_vectors,
                           IdealCheck check = IdealCheck::off, std::uint64_t seed = 0);

// Throws Error(not_an_ideal) when some a_i*v or v*a_i leaves the span.
void check_two_sided_ideal(const Algebra& a, const std::vector<Vec>& ideal_vectors,
                           IdealCheck check, std::uint64_t seed = 0);

// Coordinates of v in an RCF basis (rows with the given pivots); the caller
// guarantees membership.  Reads v at the pivot columns.
Vec rcf_coordinates(const std::vector<std::size_t>& pivots, const Vec& v);

// Subalgebra spanned by an RCF basis that is closed under multiplication,
// with structure constants in that basis.  Throws Error(not_closed) when a
// product leaves the span.
Algebra restrict_to_subalgebra(const Algebra& a, const std::vector<Vec>& rcf_rows);

}  // namespace wdec

#endif  // WDEC_ALGEBRA_HPP
