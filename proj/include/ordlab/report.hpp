#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ordlab {

/// One failed check. Strings are human readable and deterministic.
struct Violation {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string actual;
};

/// Outcome of a bounded verification run: how many instances were examined
/// and which of them failed.
struct Report {
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void fail(std::string check, std::string inputs, std::string expected, std::string actual) {
    violations.push_back({std::move(check), std::move(inputs), std::move(expected), std::move(actual)});
  }
  void merge(const Report& other) {
    checked += other.checked;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace ordlab
