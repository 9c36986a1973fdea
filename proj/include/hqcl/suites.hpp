#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hqcl/report.hpp"

namespace hqcl {

// One built-in invalid-argument case: a context formula, the bottom-level
// qumix expression of its model, and the probabilities the model must yield.
struct NvalCase {
  std::string id;
  std::string context;
  nlohmann::json bottom_expr;
  struct Target {
    std::string formula;
    double expected;
    bool from_direct_evaluation;  // true for the one mirrored construction
  };
  std::vector<Target> targets;
  std::string lhs;  // the consequence that fails: prob(lhs) > prob(rhs)
  std::string rhs;
};

const std::vector<NvalCase>& builtin_nval_cases();

// Property suites. Each case re-validates its models before asserting and is
// deterministic under the given seed.
Report run_suite_valbool(std::uint64_t trials, std::uint64_t seed);  // valid Boolean arguments
Report run_suite_nval();                                             // golden counterexamples
Report run_suite_genui(std::uint64_t trials, std::uint64_t seed);    // genuine quantum connectives
Report run_suite_gates(std::uint64_t trials, std::uint64_t seed);    // gate/reduction laws
Report run_suite_entangle(std::uint64_t seed);                       // entanglement classification
Report run_suite_all(std::uint64_t trials, std::uint64_t seed);

}  // namespace hqcl
