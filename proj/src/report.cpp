#include "kzr/report.hpp"

#include <algorithm>

namespace kzr {

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> ValidationReport::violations() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.identity);
  }
  return out;
}

void ValidationReport::merge(const ValidationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

void to_json(json& j, const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(json{{"identity", c.identity}, {"passed", c.passed}});
  j = json{{"subject", report.subject},
           {"passed", report.passed()},
           {"checks", std::move(checks)},
           {"violations", report.violations()},
           {"notes", report.notes}};
}

void from_json(const json& j, ValidationReport& report) {
  report = ValidationReport{};
  report.subject = j.at("subject").get<std::string>();
  for (const auto& c : j.at("checks")) {
    report.checks.push_back({c.at("identity").get<std::string>(), c.at("passed").get<bool>()});
  }
  report.notes = j.at("notes").get<std::vector<std::string>>();
}

}  // namespace kzr
