#ifndef WDEC_WEDDERBURN_HPP
#define WDEC_WEDDERBURN_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wdec/algebra.hpp"
#include "wdec/matrix.hpp"
#include "wdec/radical.hpp"
#include "wdec/split.hpp"

namespace wdec {

// RCF rows of span{b_j e, e b_j}: the two-sided ideal generated by a central
// idempotent e.
std::vector<Vec> simple_ideal_basis(const Algebra& q, const Vec& e);

struct LeftIdealSearch {
  std::size_t budget_per_level = 200;
  long initial_height = 3;
  std::size_t height_doublings = 3;
  std::uint64_t seed = 0;
  std::vector<Vec> hints;  // elements of the component tried as left factors
};

// Basis (RCF over the coordinates of `c`) of a left ideal of dimension q in a
// component algebra c of dimension q^2, or std::nullopt when the search
// budget runs out.
std::optional<std::vector<Vec>> find_minimal_left_ideal(const Algebra& c, std::size_t q,
                                                        const LeftIdealSearch& opt = {});

// E_ij (row-major, i, j = 1..q) solving E_ij U_k = delta_jk U_i inside c.
// Throws Error(inconsistent) when U does not carry a full matrix action.
std::vector<Vec> matrix_units(const Algebra& c, const std::vector<Vec>& u, std::size_t q);

// Checks E_ij E_kl = delta_jk E_il and sum_i E_ii = e; returns a description
// of the first failure.
std::optional<std::string> check_matrix_units(const Algebra& q, const std::vector<Vec>& units,
                                              std::size_t size, const std::optional<Vec>& identity);

enum class ComponentStatus { split, non_split, search_failed };
const char* to_string(ComponentStatus s);

struct SimpleComponent {
  Vec idempotent;                  // over the basis of the quotient
  std::vector<Vec> basis;          // RCF rows over the basis of the quotient
  std::size_t center_degree = 1;
  ComponentStatus status = ComponentStatus::split;
  std::size_t q = 0;               // matrix size when split
  std::vector<Vec> left_ideal;     // U_1..U_q over the basis of the quotient
  std::vector<Vec> units;          // E_11, E_12, ..., E_qq over the basis of the quotient
  std::string note;
};

// Builds every component from the idempotents (in order) and the split
// leaves that produced them.
std::vector<SimpleComponent> simple_components(const Algebra& q, const std::vector<Vec>& idempotents,
                                               const std::vector<FieldComponent>& leaves,
                                               std::uint64_t seed = 0);

struct RepresentationSet {
  MatrixQ m;       // columns: matrix units of split components, bases of the others
  MatrixQ m_inv;
  std::vector<std::size_t> offset;  // first column of each component in m
  // rep[k][i] = rho_k(a_i) for split component k; empty for the others.
  std::vector<std::vector<MatrixQ>> rep;
};

// Images of a_1..a_count (the first `count` basis elements of the algebra
// behind `radical`) under every split component.  Throws Error(singular) when
// the unit bases do not form a basis of the quotient.
RepresentationSet representations(const RadicalData& radical, const std::vector<SimpleComponent>& components,
                                  std::size_t count);

// rho_k(x) for an element x of the quotient.
MatrixQ component_matrix(const RepresentationSet& reps, const std::vector<SimpleComponent>& components,
                         std::size_t k, const Vec& quotient_element);

}  // namespace wdec

#endif  // WDEC_WEDDERBURN_HPP
