#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ordlab/report.hpp"

namespace ordlab::cli {

using Json = nlohmann::ordered_json;

struct Row {
  std::string id;
  std::string inputs;
  std::string expected;
  std::string actual;
  bool pass = true;
  Json extra = Json::object();
};

// Report file shared by all verbs: {verb, config, rows, counts}.
class CliReport {
 public:
  explicit CliReport(std::string verb) : verb_(std::move(verb)) {}

  Json& config() { return config_; }
  void add(Row row) { rows_.push_back(std::move(row)); }
  void add_checked(std::size_t n) { checked_ += n; }
  // Totals only, for reports whose rows are added separately.
  void add_counts(const Report& r) {
    checked_ += r.checked;
    violations_ += r.violations.size();
  }
  void set_error(std::string message) { error_ = std::move(message); }

  // A single pass row for a clean report, otherwise one row per violation
  // capped at max_rows; counts keep the full totals.
  void add_report(const std::string& id, const std::string& inputs, const Report& r, std::size_t max_rows = 200);

  std::size_t failures() const;
  bool has_error() const { return !error_.empty(); }
  std::string dump() const;
  std::string summary() const;

 private:
  std::string verb_;
  Json config_ = Json::object();
  std::vector<Row> rows_;
  std::size_t checked_ = 0;
  std::size_t violations_ = 0;
  std::string error_;
};

}  // namespace ordlab::cli
