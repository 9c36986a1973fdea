#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace hqcl {

struct CaseResult {
  std::string id;
  bool passed = false;
  std::string detail;
  std::vector<std::pair<std::string, double>> measured;
  double runtime_ms = 0.0;
};

struct Report {
  std::vector<CaseResult> cases;

  bool all_passed() const;
  void add(CaseResult r) { cases.push_back(std::move(r)); }
  void merge(const Report& other);

  void print_text(std::ostream& os) const;
  nlohmann::json to_json() const;
};

}  // namespace hqcl
