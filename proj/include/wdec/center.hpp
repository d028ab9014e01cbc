#ifndef WDEC_CENTER_HPP
#define WDEC_CENTER_HPP

#include <optional>
#include <vector>

#include "wdec/algebra.hpp"
#include "wdec/matrix.hpp"

namespace wdec {

struct CenterData {
  std::vector<Vec> basis;  // z_1..z_c over the basis of the algebra
  Algebra structure;       // f_ij^k: z_i z_j = sum_k f_ij^k z_k
  std::optional<Vec> identity;  // identity of the algebra in z-coordinates

  std::size_t dim() const { return basis.size(); }
};

// The r^2 x r matrix whose entry in row i*r + k, column j is d_ij^k - d_ji^k.
// Only practical for small r; center_basis() never materialises it.
MatrixQ commutator_matrix(const Algebra& q);

// Canonical kernel basis of commutator_matrix(q), computed by intersecting
// the kernels of the commutator blocks of b_1, b_2, ... one at a time.
std::vector<Vec> center_basis(const Algebra& q);

// Coordinates of v in the span of `basis`, from the last column of the RCF
// of [basis^t | v^t].  std::nullopt when v is not in the span.
std::optional<Vec> coordinates_in_basis(const std::vector<Vec>& basis, const Vec& v);

// Structure constants of the center on the basis z.  Throws Error(not_closed)
// when some z_i z_j escapes span(z).
Algebra center_structure(const Algebra& q, const std::vector<Vec>& z);

CenterData compute_center(const Algebra& q);

}  // namespace wdec

#endif  // WDEC_CENTER_HPP
