#include "hqcl/counterexample.hpp"

#include <nlohmann/json.hpp>

#include "hqcl/qumix_expr.hpp"
#include "hqcl/random_gen.hpp"

namespace hqcl {

Verdict search_counterexample(const Formula& alpha, const Formula& beta,
                              std::vector<Formula> contexts, SearchStrategy strategy,
                              std::uint64_t trials, std::uint64_t seed) {
  if (contexts.empty()) contexts.push_back(Formula::and_of(alpha, beta));
  for (const Formula& ctx : contexts) {
    if (!ctx.contains(alpha))
      throw std::invalid_argument("alpha is not a subformula of context " + ctx.to_string());
    if (!ctx.contains(beta))
      throw std::invalid_argument("beta is not a subformula of context " + ctx.to_string());
  }

  const TruthPerspective id = TruthPerspective::identity();
  const double tol = semantic_tolerance();
  Verdict verdict;
  for (const Formula& ctx : contexts) verdict.contexts_checked.push_back(ctx.to_string());

  const std::uint64_t attempt_cap = 10 * trials;
  std::uint64_t entangled_attempts = 0;
  bool entangled_gave_up = false;

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    // Independent per-trial stream so results do not depend on scheduling.
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
    const Formula& ctx = contexts[trial % contexts.size()];

    bool want_entangled = false;
    if (strategy == SearchStrategy::Entangled)
      want_entangled = true;
    else if (strategy == SearchStrategy::Both)
      want_entangled = (trial % 2 == 1);

    std::optional<ScopedModel> model;
    if (want_entangled && !entangled_gave_up) {
      while (entangled_attempts < attempt_cap) {
        ++entangled_attempts;
        ScopedModel candidate = random_entangled_model(rng, id, ctx);
        if (candidate.validate().ok(tol)) {
          model = std::move(candidate);
          break;
        }
      }
      if (!model) {
        entangled_gave_up = true;
        verdict.generator_starved = true;
      }
    }
    if (!model) {
      if (strategy == SearchStrategy::Entangled && entangled_gave_up) break;
      ScopedModel candidate = random_compositional_model(rng, id, ctx);
      if (!candidate.validate().ok(tol)) continue;  // should not happen
      model = std::move(candidate);
    }

    ++verdict.trials_run;
    const double pa = model->probability_of(alpha);
    const double pb = model->probability_of(beta);
    if (pa > pb + tol) {
      verdict.status = Verdict::Status::CounterexampleFound;
      Counterexample ce;
      ce.context = ctx.to_string();
      ce.prob_alpha = pa;
      ce.prob_beta = pb;
      ce.trial = trial;
      ce.model_spec_json = model_to_spec(*model, model->tree().height()).dump();
      verdict.counterexample = std::move(ce);
      return verdict;
    }
  }
  verdict.status = Verdict::Status::NotFalsified;
  return verdict;
}

}  // namespace hqcl
