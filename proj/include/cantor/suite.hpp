#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cantor/conditions.hpp"

namespace cantor {

inline constexpr std::uint64_t kDefaultSeed = 20180517;
inline constexpr int kReportVersion = 1;

enum class ReportFormat { Json, Text };

struct SuiteConfig {
  std::vector<std::string> groups;  // reported in canonical order
  Bounds bounds;
  std::string output;  // empty: standard output
  ReportFormat format = ReportFormat::Json;
  std::uint64_t seed = kDefaultSeed;
  bool timing = false;
};

struct CheckResult {
  std::string name;
  Outcome status = Outcome::Pass;
  std::map<std::string, std::string> params;
  std::vector<WitnessCert> certificates;
  std::string detail;
};

struct GroupResult {
  std::string name;
  Outcome status = Outcome::Pass;
  std::vector<CheckResult> checks;
  double seconds = 0;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  Bounds bounds;
  std::vector<GroupResult> groups;
  Outcome status = Outcome::Pass;
};

// Every group, in report order; "control" is a deliberate negative control.
const std::vector<std::string>& all_groups();
// The groups a plain `suite` run executes (everything but the control).
const std::vector<std::string>& default_groups();

// Groups run concurrently, each with its own generator derived from the seed,
// and are merged in canonical order.
SuiteReport run_suite(const SuiteConfig& cfg);

std::string report_to_json(const SuiteReport& r, bool timing);
std::string report_to_text(const SuiteReport& r);

int exit_code(Outcome o) noexcept;

}  // namespace cantor
