#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace unilab {

struct SweepConfig {
  uint64_t seed = 0;
  int instance_count = 100;
  int max_size = 5;                 // carrier bound for random instances
  std::vector<std::string> suites;  // empty runs all
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  nlohmann::json first_counterexample;  // null when clean
};

struct SweepReport {
  SweepConfig config;
  std::vector<SuiteResult> suites;
  bool all_passed() const {
    for (const auto& s : suites)
      if (s.failures > 0) return false;
    return true;
  }
  nlohmann::json to_json() const;
};

std::vector<std::string> known_suites();

// Runs the selected suites, each from a fresh engine at the configured
// seed, so reports are byte-identical across runs and machines. No clocks,
// no host data.
SweepReport run_sweep(const SweepConfig& config);

}  // namespace unilab
