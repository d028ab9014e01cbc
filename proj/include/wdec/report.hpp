#ifndef WDEC_REPORT_HPP
#define WDEC_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wdec/pipeline.hpp"

namespace wdec {

using Json = nlohmann::ordered_json;

Json to_json(const Vec& v);
Json to_json(const std::vector<Vec>& vs);
Json to_json(const MatrixQ& m);
// [[i, j, k, "c"], ...], 1-based, nonzero constants only
Json structure_to_json(const Algebra& a);

Vec vec_from_json(const Json& j);
std::vector<Vec> vecs_from_json(const Json& j);
MatrixQ matrix_from_json(const Json& j);

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);
Json table_to_json(const MultiplicationTable& t);
MultiplicationTable table_from_json(const Json& j);

struct InputData {
  Json descriptor;
  Algebra algebra;
  std::optional<MultiplicationTable> table;
};

// {"family": name, "n": n}
InputData input_from_family(const std::string& family, std::size_t n);
// Table JSON or algebra JSON, told apart by their keys.
InputData input_from_file(const std::string& path);
InputData input_from_json(const Json& j, Json descriptor);

Decomposition run_pipeline(const InputData& in, const PipelineOptions& opt);

Json report_json(const Decomposition& d, const InputData& in, const PipelineOptions& opt);
std::string report_text(const Decomposition& d);

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Re-checks every invariant recorded in a serialized report against the
// input it was computed from.  Stops after "dimensions" when the report does
// not match the input.
std::vector<CheckResult> verify_report(const Json& report, const InputData& in);

}  // namespace wdec

#endif  // WDEC_REPORT_HPP
