#ifndef WDEC_SPLIT_HPP
#define WDEC_SPLIT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wdec/algebra.hpp"
#include "wdec/polynomial.hpp"

namespace wdec {

// Everything in this module works over the z-basis of a commutative
// semisimple algebra `f` (typically the center structure).

// Least-degree monic p with p(u) = 0, where u^0 is read as the ideal identity e.
Polynomial minimal_polynomial(const Algebra& f, const Vec& e, const Vec& u);

// p(u) with u^0 = e.
Vec evaluate_at(const Algebra& f, const Polynomial& p, const Vec& e, const Vec& u);

// RCF rows of span{z_i * u : i = 1..c}.
std::vector<Vec> ideal_basis_from_generator(const Algebra& f, const Vec& u);

// The e in span(basis) with e*y = y for every basis vector y.  Throws
// Error(inconsistent) when no such element exists.
Vec ideal_identity(const Algebra& f, const std::vector<Vec>& basis);

enum class NodeStatus { split_pending, field_q, field_extension, unresolved };
const char* to_string(NodeStatus s);

struct SplitOptions {
  std::uint64_t seed = 0;
  std::size_t kronecker_max_degree = 8;
  std::size_t primitive_trials = 64;
};

// A leaf of the splitting tree: a field summand of the algebra.
struct FieldComponent {
  std::vector<Vec> basis;
  Vec idempotent;            // z-coordinates, idempotent
  NodeStatus status = NodeStatus::split_pending;
  Polynomial min_poly;       // of a primitive element of the leaf
  std::string note;          // reason for an unresolved leaf

  std::size_t degree() const { return basis.size(); }
};

struct SplitResult {
  std::vector<FieldComponent> components;  // canonical order

  bool resolved() const;
  std::vector<Vec> idempotents() const;
};

// Recursive ideal splitting.  Leaves are returned depth first, the child
// generated by the first factor of the minimal polynomial before its
// cofactor.  Failures are reported as unresolved leaves rather than thrown.
SplitResult split_to_idempotents(const Algebra& f, const Vec& identity, const SplitOptions& opt = {});

}  // namespace wdec

#endif  // WDEC_SPLIT_HPP
