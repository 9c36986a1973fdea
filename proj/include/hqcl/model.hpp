#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hqcl/partition.hpp"
#include "hqcl/syntax_tree.hpp"
#include "hqcl/truth_perspective.hpp"

namespace hqcl {

struct ModelDiagnostics {
  double max_linkage_residual = 0.0;

  struct ConstantViolation {
    TreeOccurrence occ;
    double residual;
  };
  struct NormalityViolation {
    std::string formula;
    TreeOccurrence first;
    TreeOccurrence second;
    double residual;
  };
  std::vector<ConstantViolation> constant_violations;
  std::vector<NormalityViolation> normality_violations;

  // Whether every level factorizes as the tensor of its occurrences'
  // contextual meanings; unset when the context exceeds the dense cap.
  std::optional<bool> compositional;

  std::vector<std::string> notes;

  bool ok(double tol) const {
    return max_linkage_residual <= tol && constant_violations.empty() &&
           normality_violations.empty();
  }
  std::vector<std::string> describe() const;
};

// A holistic model restricted to one context formula: one qumix per level of
// the context's syntactical tree, linked by the compiled level gates.
class ScopedModel {
 public:
  // Seeds one level and fills the rest by forward/inverse gate application.
  // Does not validate constants or normality; see validate().
  ScopedModel(TruthPerspective t, Formula context, int seed_level, Qumix seed);

  // Top level = tensor of per-occurrence meanings; equal atoms share one
  // meaning, t/f get the perspective's truth/falsity states.
  static ScopedModel compositional(TruthPerspective t, Formula context,
                                   const std::map<int, Qumix>& atom_meanings);

  const TruthPerspective& perspective() const { return perspective_; }
  const Formula& context() const { return tree_.root(); }
  const SyntacticalTree& tree() const { return tree_; }
  const GateTree& gates() const { return gate_tree_; }
  const Qumix& level_meaning(int paper_level) const { return meanings_[paper_level - 1]; }

  Qumix contextual_meaning(const TreeOccurrence& occ) const;
  Qumix contextual_meaning(const Formula& sub) const;
  // Joint reduced state of several occurrences of one level.
  Qumix joint_contextual_meaning(int level, std::span<const int> positions) const;

  double probability_of(const TreeOccurrence& occ) const;
  double probability_of(const Formula& sub) const;
  Eigen::Matrix2cd generalized_truth_value(const TreeOccurrence& occ) const;

  bool is_true(double tol) const;  // Prob of the whole context == 1

  ModelDiagnostics validate() const;

 private:
  ScopedModel(TruthPerspective t, SyntacticalTree tree);
  void fill_from(int seed_level);

  TruthPerspective perspective_;
  SyntacticalTree tree_;
  GateTree gate_tree_;
  std::vector<Qumix> meanings_;
};

// Hol^ctx(alpha) preceq_T Hol^ctx(beta).
bool consequence_in_context(const ScopedModel& m, const Formula& alpha, const Formula& beta);

// Model for context (x) beta with beta's atoms disjoint from the context's;
// preserves every contextual meaning of the base context.
ScopedModel extend_model(const ScopedModel& base, const Formula& beta,
                         const std::map<int, Qumix>& beta_atom_meanings);

// Conjugates every level of a canonical model by T^(n), yielding a model at
// perspective T with identical probabilities.
ScopedModel transport_model(const ScopedModel& canonical, const TruthPerspective& t);

}  // namespace hqcl
