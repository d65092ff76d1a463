#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ores/io/formats.hpp"

namespace ores {

struct ScenarioConfig {
  /// Preset name or presentation file; empty selects the scenario default.
  std::string presentation;
  std::size_t max_factors = 2;
  std::size_t max_degree = 2;
  std::size_t regularity_depth = 2;
  double tol = 1e-10;
  double probe_tol = 1e-8;
  std::size_t max_truncation = 1 << 16;
  std::string out_dir;
  std::uint64_t seed = 0;
  /// 0 selects the scenario default.
  std::size_t samples = 0;
  std::size_t degree = 0;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
  json to_json() const;
  /// Unknown keys are rejected.
  static ScenarioConfig from_json(const json& j);
};

/// Ordered list of records plus pass/fail counts.
class Report {
 public:
  explicit Report(std::string name) : name_(std::move(name)) {}

  void add(json record, bool pass);
  /// Record without a verdict (measurements such as found-rates).
  void note(json record);

  const std::string& name() const { return name_; }
  std::size_t passed() const { return passed_; }
  std::size_t failed() const { return failed_; }
  bool pass() const { return failed_ == 0; }
  const std::vector<json>& records() const { return records_; }

  /// JSON lines: {"generated": timestamp}, the records, then a summary.
  std::string jsonl(const std::string& timestamp) const;

 private:
  std::string name_;
  std::vector<json> records_;
  std::size_t passed_ = 0;
  std::size_t failed_ = 0;
};

std::vector<std::string> scenario_names();

/// Throws ConfigError for an unknown name or invalid config.
Report run_scenario(const std::string& name, const ScenarioConfig& config);

/// UTC time in ISO 8601.
std::string timestamp_now();

}  // namespace ores
