#pragma once

#include <string>

#include <json.hpp>

#include "isocompat/boost_demo.hpp"
#include "isocompat/fixed_space.hpp"
#include "isocompat/group_spec.hpp"
#include "isocompat/hyperbolic.hpp"
#include "isocompat/packing.hpp"
#include "isocompat/pde/counterexample.hpp"
#include "isocompat/pde/solver.hpp"
#include "isocompat/spd.hpp"
#include "isocompat/triviality.hpp"

namespace isocompat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Malformed JSON input (missing fields, wrong types, bad shapes).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Vec& v);
Json to_json(const Mat& m);
Vec vec_from_json(const Json& j, const std::string& what);
Mat mat_from_json(const Json& j, const std::string& what);

/// {"matrix": [[...], ...], "translation": [...]}; translation defaults to 0.
Json to_json(const EuclideanIsometry& g);
EuclideanIsometry isometry_from_json(const Json& j);

/// {"dimension": n, "family": {"type": ..., ...}, "twist": {...} | null}
Json to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& j);

Json to_json(const MetricPoint& p);
Json to_json(const PackingReport& r);
Json to_json(const TwistReport& r);
Json to_json(const TrivialityReport& r);
Json to_json(const FixedSubspace& r);
Json to_json(const RauchSweepReport& r);
Json to_json(const CommutantResult& r);
Json to_json(const SlTwistReport& r);
Json to_json(const pde::SolveReport& r);
Json to_json(const pde::CounterexampleReport& r);

/// {"schema_version", "kind", "config", "generated_at"?, "result"}.
Json make_report(const std::string& kind, const Json& config, const Json& result, bool timestamp);

/// Parses a file; throws InputError on IO or syntax errors.
Json read_json_file(const std::string& path);
/// Writes `j` pretty-printed with a trailing newline; throws std::runtime_error on IO errors.
void write_json_file(const std::string& path, const Json& j);

}  // namespace isocompat
