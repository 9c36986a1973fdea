#include "hqcl/report.hpp"

#include <iomanip>
#include <ostream>

namespace hqcl {

bool Report::all_passed() const {
  for (const CaseResult& c : cases)
    if (!c.passed) return false;
  return true;
}

void Report::merge(const Report& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

void Report::print_text(std::ostream& os) const {
  for (const CaseResult& c : cases) {
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.id;
    if (!c.detail.empty()) os << "  " << c.detail;
    if (!c.measured.empty()) {
      os << "  [";
      for (std::size_t i = 0; i < c.measured.size(); ++i) {
        if (i) os << ", ";
        os << c.measured[i].first << "=" << std::setprecision(12) << c.measured[i].second;
      }
      os << "]";
    }
    os << "\n";
  }
  os << (all_passed() ? "all cases passed" : "FAILURES present") << " (" << cases.size()
     << " cases)\n";
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["cases"] = nlohmann::json::array();
  for (const CaseResult& c : cases) {
    nlohmann::json jc = {{"id", c.id},
                         {"passed", c.passed},
                         {"detail", c.detail},
                         {"runtime_ms", c.runtime_ms}};
    jc["measured"] = nlohmann::json::object();
    for (const auto& [k, v] : c.measured) jc["measured"][k] = v;
    out["cases"].push_back(jc);
  }
  out["all_passed"] = all_passed();
  return out;
}

}  // namespace hqcl
