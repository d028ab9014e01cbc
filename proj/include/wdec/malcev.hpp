#ifndef WDEC_MALCEV_HPP
#define WDEC_MALCEV_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wdec/algebra.hpp"
#include "wdec/radical.hpp"

namespace wdec {

// RCF bases of R, R^2, ..., R^nu (all nonzero, strictly decreasing).  Empty
// when the radical is zero.
std::vector<std::vector<Vec>> radical_power_chain(const Algebra& a, const std::vector<Vec>& radical);

// Square-zero lifting problem inside an algebra b: find gamma_i in span(zeta)
// with (beta_i + gamma_i)(beta_j + gamma_j) = sum_k d_ij^k (beta_k + gamma_k),
// given that span(zeta) is an ideal with zero square.
struct LiftingProblem {
  const Algebra* algebra = nullptr;
  std::vector<Vec> beta;       // coset representatives
  std::vector<Vec> zeta;       // RCF basis of the square-zero ideal
  const Algebra* target = nullptr;  // d_ij^k on r = beta.size() generators
  // Sizes q of consecutive matrix-unit blocks E_11, E_12, ..., E_qq covering
  // all generators; empty when some block is not a full matrix-unit system.
  std::vector<std::size_t> unit_sizes;
};

struct LiftFamily {
  // Unknown x_il (coefficient of zeta_l in gamma_i) sits at column l * r + i,
  // r = beta.size().
  Vec particular;                       // all free parameters zero
  std::vector<SparseRow> homogeneous;   // one per free column
  std::vector<std::size_t> free_columns;

  std::size_t params() const { return free_columns.size(); }
};

// Canonical solution family: the particular solution has every free column
// zero, the homogeneous vectors are unit on their free column.  Uses the
// matrix-unit blocks when given, the full linear system otherwise.
LiftFamily solve_square_zero(const LiftingProblem& p);
LiftFamily solve_square_zero_linear(const LiftingProblem& p);
LiftFamily solve_square_zero_units(const LiftingProblem& p);

// dim span(zeta) - dim { z in span(zeta) : beta_i z = z beta_i for all i }.
std::size_t expected_parameter_count(const LiftingProblem& p);

// beta_i + sum_l x_il zeta_l for the given unknown vector x.
std::vector<Vec> apply_lift(const LiftingProblem& p, const Vec& x);

struct LiftedBasis {
  std::size_t stages = 0;
  std::vector<Vec> basis;                   // elements of A
  std::size_t params_free = 0;
  std::vector<std::string> param_names;     // free parameters, in stage order
  std::map<std::string, Rational> values;   // nonzero parameter values used
};

// Lifts the quotient basis w_1..w_r (vectors over the quotient basis, with
// structure constants `target`) to a subalgebra of A complementing the
// radical.  Stage 1 parameters are named x<i>_<l>; later stages
// s<mu>.x<i>_<l>.  Unknown parameter names raise Error(input).
LiftedBasis lift_general(const Algebra& a, const RadicalData& radical, const std::vector<Vec>& w,
                         const Algebra& target, const std::map<std::string, Rational>& params = {},
                         const std::vector<std::size_t>& unit_sizes = {});

// Single square-zero stage lifting the given quotient basis directly into A.
// Requires R^2 = 0.
LiftedBasis lift_square_zero(const Algebra& a, const RadicalData& radical, const std::vector<Vec>& w,
                             const Algebra& target, const std::map<std::string, Rational>& params = {},
                             const std::vector<std::size_t>& unit_sizes = {});

// Structure constants of the quotient in the basis w (columns of an
// invertible matrix).
Algebra structure_in_basis(const Algebra& q, const std::vector<Vec>& w);

// Structure constants on the concatenation of blocks lying in distinct
// two-sided ideals.  unit_sizes[k] = q marks block k as matrix units E_ij in
// row-major order; 0 computes the products inside the block.
Algebra block_structure(const Algebra& q, const std::vector<std::vector<Vec>>& blocks,
                        const std::vector<std::size_t>& unit_sizes);

// Empty when the lifted vectors multiply like `target`, span a complement of
// the radical and project onto w; otherwise a description of the failure.
std::optional<std::string> check_lift(const Algebra& a, const RadicalData& radical, const std::vector<Vec>& w,
                                      const Algebra& target, const std::vector<Vec>& lifted);

}  // namespace wdec

#endif  // WDEC_MALCEV_HPP
