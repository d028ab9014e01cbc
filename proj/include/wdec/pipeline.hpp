#ifndef WDEC_PIPELINE_HPP
#define WDEC_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wdec/algebra.hpp"
#include "wdec/boolsemi.hpp"
#include "wdec/center.hpp"
#include "wdec/error.hpp"
#include "wdec/malcev.hpp"
#include "wdec/radical.hpp"
#include "wdec/split.hpp"
#include "wdec/wedderburn.hpp"

namespace wdec {

struct PipelineOptions {
  std::uint64_t seed = 0;
  std::size_t kronecker_max_degree = 8;
  std::size_t primitive_trials = 64;
  bool lift = true;
  std::map<std::string, Rational> lift_params;
  AssocMode check_assoc = AssocMode::automatic;
  std::string field = "Q";
};

struct StageError {
  std::string stage;
  ErrorKind kind;
  std::string message;
};

struct Decomposition {
  std::size_t input_dim = 0;
  bool identity_adjoined = false;
  Algebra algebra;  // the unital algebra that was decomposed
  std::optional<MultiplicationTable> table;

  std::optional<RadicalData> radical;
  std::optional<CenterData> center;
  std::optional<SplitResult> split;
  std::vector<Vec> idempotents;  // over the quotient basis
  std::vector<SimpleComponent> components;
  std::optional<RepresentationSet> reps;
  std::vector<Vec> unit_basis;   // columns of M
  std::optional<Algebra> unit_structure;
  std::optional<LiftedBasis> lift;

  std::vector<StageError> errors;

  bool complete() const { return errors.empty(); }
  // q for split components, dimension followed by '*' otherwise; ascending.
  std::vector<std::string> component_sizes() const;
  // "dim_A / dim_R / dim_Q / q1,q2,..."
  std::string summary() const;
};

// Runs every stage.  Input errors (wrong field, non-associative input) are
// thrown; failures of later stages are recorded in `errors` and the stages
// that do not depend on them still run.
Decomposition decompose(const Algebra& a, const std::optional<MultiplicationTable>& table,
                        const PipelineOptions& opt = {});

// Structure constants of a semigroup algebra, identity recorded when present;
// no associativity check.
Algebra table_algebra(const MultiplicationTable& t);

Decomposition decompose_table(const MultiplicationTable& t, const PipelineOptions& opt = {});

// Makes the algebra unital: keeps its identity, finds one, or adjoins one.
// Returns true when a new basis element was adjoined.
bool ensure_identity(Algebra& a);

}  // namespace wdec

#endif  // WDEC_PIPELINE_HPP
