#pragma once

#include <string>
#include <vector>

#include "kzr/exactnum/serialize.hpp"

namespace kzr {

/// Outcome of an exact identity suite. Violations are data, not errors.
struct ValidationReport {
  struct Check {
    std::string identity;
    bool passed = true;
    friend bool operator==(const Check&, const Check&) = default;
  };

  std::string subject;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  void record(std::string identity, bool passed) { checks.push_back({std::move(identity), passed}); }
  bool passed() const;
  std::vector<std::string> violations() const;
  /// Appends another report's checks and notes.
  void merge(const ValidationReport& other);

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

void to_json(json& j, const ValidationReport& report);
void from_json(const json& j, ValidationReport& report);

}  // namespace kzr
