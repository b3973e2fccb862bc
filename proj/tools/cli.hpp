#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "comgraph/analysis.hpp"

namespace comgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCapExceeded = 2;
inline constexpr int kExitMismatch = 3;

/// Bumped whenever the record or report layout changes.
inline constexpr int kSchemaVersion = 1;

std::string artifact_version();

/// One line of results.jsonl.
struct ResultRecord {
  std::string spec;
  std::string suite;
  std::uint64_t group_order = 0;
  std::uint64_t center_order = 0;
  std::string mode;
  bool connected = false;
  nlohmann::json diameter;  // integer or "infinity"
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::int64_t elapsed_ms = 0;
  std::string version = artifact_version();
  int schema = kSchemaVersion;

  nlohmann::json to_json() const;
  static ResultRecord from_json(const nlohmann::json& doc);
  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Builds a record from a report whose measured block holds the graph fields.
ResultRecord make_record(std::string spec, std::string suite, const TheoremReport& report);

struct Instance {
  std::string suite;
  std::string spec;  // canonical form
};

/// Suite names accepted by `verify`, "all" last.
const std::vector<std::string>& suite_names();
/// Instances of a suite in run order. Throws std::invalid_argument for unknown names.
std::vector<Instance> suite_instances(std::string_view suite);

/// Runs the checker that belongs to the instance's suite.
TheoremReport run_instance(const Instance& instance, const AnalysisOptions& options);

struct Comparison {
  bool ok = true;
  std::vector<std::string> diffs;
};

/// Checks a report against the expected-values corpus and the checker's own verdict.
Comparison compare(const Instance& instance, const TheoremReport& report, const nlohmann::json& corpus);

/// Reads COMGRAPH_THREADS; 0 (auto) when unset or malformed.
unsigned threads_from_env();

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace comgraph::cli
