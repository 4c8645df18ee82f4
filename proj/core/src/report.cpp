#include "iondyn/report.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace iondyn::oracle {

void ValidationReport::add(CheckRecord record) { records.push_back(std::move(record)); }

void ValidationReport::add_finding(std::string text) { findings.push_back(std::move(text)); }

void ValidationReport::sort() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     if (a.check != b.check) return a.check < b.check;
                     return a.params < b.params;
                   });
}

int ValidationReport::hard_total() const {
  int n = 0;
  for (const CheckRecord& r : records) n += r.hard ? 1 : 0;
  return n;
}

int ValidationReport::hard_passed() const {
  int n = 0;
  for (const CheckRecord& r : records) n += (r.hard && r.pass) ? 1 : 0;
  return n;
}

bool ValidationReport::all_hard_passed() const { return hard_passed() == hard_total(); }

std::string ValidationReport::to_json_string() const {
  nlohmann::ordered_json doc;
  doc["tool"] = "iondyn 1.0.0";
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& r : records) {
    nlohmann::ordered_json rec;
    rec["check"] = r.check;
    rec["params"] = r.params;
    rec["residual"] = r.residual;
    if (std::isnan(r.tolerance)) {
      rec["tolerance"] = nullptr;
    } else {
      rec["tolerance"] = r.tolerance;
    }
    rec["comparison"] = r.comparison;
    rec["pass"] = r.pass;
    rec["hard"] = r.hard;
    if (!r.note.empty()) rec["note"] = r.note;
    if (!r.values.empty()) {
      auto sorted = r.values;
      std::stable_sort(sorted.begin(), sorted.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      nlohmann::ordered_json vals;
      for (const auto& [key, value] : sorted) vals[key] = value;
      rec["values"] = vals;
    }
    doc["checks"].push_back(rec);
  }
  doc["findings"] = findings;
  doc["summary"] = {{"hard_total", hard_total()},
                    {"hard_passed", hard_passed()},
                    {"soft_total", static_cast<int>(records.size()) - hard_total()},
                    {"all_hard_passed", all_hard_passed()}};
  return doc.dump(2) + "\n";
}

std::string ValidationReport::exit_summary() const {
  return "validation: " + std::to_string(hard_passed()) + "/" + std::to_string(hard_total()) +
         " hard checks passed, " +
         std::to_string(static_cast<int>(records.size()) - hard_total()) + " report-only records, " +
         std::to_string(static_cast<int>(findings.size())) + " findings";
}

}  // namespace iondyn::oracle
