#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace iondyn::oracle {

// One validation record: which check, at which parameter point, what
// residual against what tolerance. Soft (report-only) records carry a NaN
// tolerance and never fail a run.
struct CheckRecord {
  std::string check;
  std::string params;
  double residual = 0.0;
  double tolerance = std::numeric_limits<double>::quiet_NaN();
  std::string comparison = "<=";  // "<=" upper bound on residual, ">=" lower bound
  bool pass = true;
  bool hard = false;
  std::string note;
  std::vector<std::pair<std::string, double>> values;  // extra named scalars
};

struct ValidationReport {
  std::vector<CheckRecord> records;
  std::vector<std::string> findings;

  void add(CheckRecord record);
  void add_finding(std::string text);

  // stable order: by check name, then parameter string
  void sort();

  int hard_total() const;
  int hard_passed() const;
  bool all_hard_passed() const;

  // Deterministic JSON serialization; byte-identical for identical inputs.
  std::string to_json_string() const;
  std::string exit_summary() const;
};

}  // namespace iondyn::oracle
