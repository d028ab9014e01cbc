#ifndef WDEC_RADICAL_HPP
#define WDEC_RADICAL_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "wdec/algebra.hpp"
#include "wdec/boolsemi.hpp"
#include "wdec/matrix.hpp"

namespace wdec {

// Gram matrix of the trace form: Delta_ij = sum_k sum_l c_ji^k c_kl^l, i.e.
// trace of left multiplication by a_j a_i.  In characteristic 0 its kernel is
// the radical of a unital algebra.
MatrixQ dickson_matrix(const Algebra& a);

// Same matrix for a semigroup algebra, by counting fixed points:
// Delta_ij = |{ l : mu(mu(j,i), l) = l }|.
MatrixQ drazin_matrix(const MultiplicationTable& t);

struct RadicalData {
  MatrixQ delta;
  RcfResult delta_rcf;
  std::vector<Vec> canonical_basis;  // kernel basis of delta, by free column
  Quotient quotient;                 // quotient.ideal.rows is the reduced basis

  std::size_t dim() const { return canonical_basis.size(); }
  const std::vector<Vec>& reduced_basis() const { return quotient.ideal.rows; }
};

struct RadicalOptions {
  IdealCheck ideal_check = IdealCheck::automatic;
  std::uint64_t seed = 0;
};

// Kernel of delta -> canonical basis -> reduced basis -> quotient.  The
// algebra must be unital (adjoin an identity first).
RadicalData radical_from_delta(const Algebra& a, MatrixQ delta, const RadicalOptions& opt = {});
RadicalData radical_basis(const Algebra& a, const RadicalOptions& opt = {});
// Drazin route for semigroup algebras.
RadicalData radical_basis(const Algebra& a, const MultiplicationTable& t, const RadicalOptions& opt = {});

// Only Q is supported; any other field name raises Error(unsupported).
void require_rational_field(std::string_view field);

// t_k = trace(L_{a_k}) = sum_l c_kl^l
Vec basis_traces(const Algebra& a);

// trace(L_x) for x in the algebra.
Rational trace_of_left_mult(const Algebra& a, const Vec& x);

}  // namespace wdec

#endif  // WDEC_RADICAL_HPP
