#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hqcl/model.hpp"

namespace hqcl {

enum class SearchStrategy { Compositional, Entangled, Both };

struct Counterexample {
  std::string context;
  double prob_alpha = 0.0;
  double prob_beta = 0.0;
  std::uint64_t trial = 0;
  std::string model_spec_json;  // replayable through eval
};

// Outcome of a consequence or equivalence check: a concrete counterexample,
// not-falsified after the requested trials, or (classical fragment only) an
// exhaustive positive answer.
struct Verdict {
  enum class Status { NotFalsified, CounterexampleFound, HoldsExhaustively };
  Status status = Status::NotFalsified;
  std::uint64_t trials_run = 0;
  std::optional<Counterexample> counterexample;
  bool generator_starved = false;
  std::vector<std::string> contexts_checked;

  bool falsified() const { return status == Status::CounterexampleFound; }
};

// Randomized counterexample search for alpha |= beta over the given contexts
// (default: the single context alpha & beta). Deterministic under a fixed
// seed. By the invariance of consequence under truth-perspective changes,
// searching at the canonical perspective suffices.
Verdict search_counterexample(const Formula& alpha, const Formula& beta,
                              std::vector<Formula> contexts, SearchStrategy strategy,
                              std::uint64_t trials, std::uint64_t seed);

}  // namespace hqcl
