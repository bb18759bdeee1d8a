#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffgraph/graph.hpp"
#include "diffgraph/perfect.hpp"

namespace dg {

// One entry of the theorem check suite. Every FAIL carries a counterexample
// certificate; every SKIPPED carries a reason. Wall time is console-only
// and never serialized, so reports stay byte-identical across runs.
struct CheckResult {
  std::string id;     // family id, possibly with a sub-entry suffix ("C8.an-large")
  std::string name;   // kebab-case check name
  std::string claim;  // self-describing statement of what is verified
  enum class Status { Pass, Fail, Skipped };
  Status status = Status::Pass;
  std::string skip_reason;  // "scale" or "unconstructible"
  nlohmann::json certificate;
  double wall_ms = 0.0;

  std::string status_str() const;
};

struct SuiteOptions {
  std::string filter = "*";  // glob over family ids ("C3", "C1*", "*")
  u64 max_order = 200;
  u64 seed = 1;
  int workers = 0;
  std::filesystem::path cayley_dir;  // optional: imported tables join the catalog
  int hole_bound = kHoleUnbounded;   // perfectness checks run unbounded by default
  u64 node_budget = 100'000'000;
};

// The deterministic family of groups "constructible" by the spec language
// at the given order bound, as spec strings. Imported Cayley files extend
// it when a directory is supplied.
std::vector<std::string> constructible_catalog(u64 max_order,
                                               const std::filesystem::path& cayley_dir = {});

std::vector<CheckResult> run_suite(const SuiteOptions& opts = {});

bool suite_failed(const std::vector<CheckResult>& results);
nlohmann::json suite_report_json(const std::vector<CheckResult>& results,
                                 const SuiteOptions& opts);

}  // namespace dg
