#include "cayleysum/report.hpp"

namespace cayleysum {

nlohmann::json RunReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  j["pass"] = passed();
  if (include_timing) {
    j["timing"] = nlohmann::json::array();
    for (const auto& t : timing) j["timing"].push_back({{"stage", t.stage}, {"seconds", t.seconds}});
  }
  return j;
}

RunReport RunReport::from_json(const nlohmann::json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.value("inputs", nlohmann::json::object());
  r.outputs = j.value("outputs", nlohmann::json::object());
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                        c.at("actual").get<std::string>(), c.at("pass").get<bool>()});
  }
  if (j.contains("timing")) {
    for (const auto& t : j.at("timing")) {
      r.timing.push_back({t.at("stage").get<std::string>(), t.at("seconds").get<double>()});
    }
  }
  return r;
}

}  // namespace cayleysum
