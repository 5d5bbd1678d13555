#include "report_json.hpp"

namespace ordlab::cli {

void CliReport::add_report(const std::string& id, const std::string& inputs, const Report& r, std::size_t max_rows) {
  add_counts(r);
  if (r.ok()) {
    add({id, inputs, "0 violations", std::to_string(r.checked) + " checked, 0 violations", true});
    return;
  }
  for (std::size_t k = 0; k < r.violations.size() && k < max_rows; ++k) {
    const Violation& v = r.violations[k];
    add({id + "/" + v.check, v.inputs, v.expected, v.actual, false});
  }
}

std::size_t CliReport::failures() const {
  std::size_t n = 0;
  for (const Row& row : rows_)
    if (!row.pass) ++n;
  return n;
}

std::string CliReport::dump() const {
  Json j;
  j["verb"] = verb_;
  j["config"] = config_;
  Json rows = Json::array();
  for (const Row& row : rows_) {
    Json r;
    r["id"] = row.id;
    r["inputs"] = row.inputs;
    r["expected"] = row.expected;
    r["actual"] = row.actual;
    r["pass"] = row.pass;
    for (const auto& [k, v] : row.extra.items()) r[k] = v;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  Json counts;
  counts["rows"] = rows_.size();
  counts["failedRows"] = failures();
  counts["checked"] = checked_;
  counts["violations"] = violations_;
  j["counts"] = std::move(counts);
  if (!error_.empty()) j["error"] = error_;
  return j.dump(2) + "\n";
}

std::string CliReport::summary() const {
  if (!error_.empty()) return verb_ + ": error: " + error_;
  return verb_ + ": " + std::to_string(rows_.size()) + " rows, " + std::to_string(failures()) + " failed, " +
         std::to_string(checked_) + " checks, " + std::to_string(violations_) + " violations";
}

}  // namespace ordlab::cli
