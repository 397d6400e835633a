#pragma once

// A named expected/actual comparison, the unit of every report.

#include <sstream>
#include <string>
#include <vector>

namespace cayleysum {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;

  friend bool operator==(const Check&, const Check&) = default;
};

inline Check check_equal(std::string name, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  return {std::move(name), std::move(expected), std::move(actual), pass};
}

inline Check check_true(std::string name, bool condition, std::string detail = {}) {
  return {std::move(name), "true", condition ? "true" : (detail.empty() ? "false" : detail),
          condition};
}

/// "(a,b,c)" using operator<< on the elements.
template <class Range>
std::string format_tuple(const Range& values) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << ')';
  return out.str();
}

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace cayleysum
