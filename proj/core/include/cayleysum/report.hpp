#pragma once

// Machine-readable record of one command run.

#include "cayleysum/check.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace cayleysum {

struct StageTiming {
  std::string stage;
  double seconds = 0;

  friend bool operator==(const StageTiming&, const StageTiming&) = default;
};

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  std::vector<Check> checks;
  std::vector<StageTiming> timing;

  [[nodiscard]] bool passed() const { return all_pass(checks); }

  /// Timing varies between runs, so it is left out unless asked for.
  [[nodiscard]] nlohmann::json to_json(bool include_timing = false) const;
  static RunReport from_json(const nlohmann::json& j);

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

}  // namespace cayleysum
