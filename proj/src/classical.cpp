#include "hqcl/classical.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hqcl/model.hpp"

namespace hqcl {

int classical_eval(const Formula& f, const std::map<int, int>& assignment) {
  switch (f.kind()) {
    case FormulaKind::True:
      return 1;
    case FormulaKind::False:
      return 0;
    case FormulaKind::Atom: {
      auto it = assignment.find(f.atom_id());
      if (it == assignment.end())
        throw std::invalid_argument("unassigned atom q" + std::to_string(f.atom_id()));
      return it->second;
    }
    case FormulaKind::Not:
      return 1 - classical_eval(f.child(0), assignment);
    case FormulaKind::Toffoli:
      return (classical_eval(f.child(0), assignment) & classical_eval(f.child(1), assignment)) ^
             classical_eval(f.child(2), assignment);
    case FormulaKind::Xor:
      return classical_eval(f.child(0), assignment) ^ classical_eval(f.child(1), assignment);
    default:
      throw std::invalid_argument("classical evaluation needs a Boolean formula");
  }
}

namespace {

std::vector<int> merged_atoms(const Formula& alpha, const Formula& beta) {
  return Formula::and_of(alpha, beta).atoms();
}

}  // namespace

bool truth_table_entails(const Formula& alpha, const Formula& beta) {
  const std::vector<int> atoms = merged_atoms(alpha, beta);
  const std::uint64_t count = std::uint64_t{1} << atoms.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::map<int, int> assignment;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      assignment[atoms[i]] = static_cast<int>((mask >> i) & 1u);
    if (classical_eval(alpha, assignment) > classical_eval(beta, assignment)) return false;
  }
  return true;
}

Verdict check_classical_consequence(const Formula& alpha, const Formula& beta) {
  if (!alpha.is_boolean() || !beta.is_boolean())
    throw std::invalid_argument("classical consequence is defined on the Boolean fragment");

  const Formula context = Formula::and_of(alpha, beta);
  const std::vector<int> atoms = context.atoms();
  const TruthPerspective id = TruthPerspective::identity();
  const double tol = semantic_tolerance();

  Verdict verdict;
  verdict.contexts_checked.push_back(context.to_string());
  const std::uint64_t count = std::uint64_t{1} << atoms.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::map<int, Qumix> meanings;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      meanings.emplace(atoms[i], Qumix::basis_projector(1, (mask >> i) & 1u));
    ScopedModel model = ScopedModel::compositional(id, context, meanings);
    const double pa = model.probability_of(alpha);
    const double pb = model.probability_of(beta);
    ++verdict.trials_run;
    if (pa > pb + tol) {
      verdict.status = Verdict::Status::CounterexampleFound;
      Counterexample ce;
      ce.context = context.to_string();
      ce.prob_alpha = pa;
      ce.prob_beta = pb;
      ce.trial = mask;
      nlohmann::json factors = nlohmann::json::array();
      for (const TreeOccurrence& occ : model.tree().level(model.tree().height())) {
        if (occ.formula.kind() == FormulaKind::Atom) {
          auto it = meanings.find(occ.formula.atom_id());
          bool one = it->second.members().front().vec[1] != cxd{0.0, 0.0};
          factors.push_back({{"proj", one ? "1" : "0"}});
        } else {
          factors.push_back({{"proj", occ.formula.kind() == FormulaKind::True ? "1" : "0"}});
        }
      }
      nlohmann::json spec = {{"truth_perspective", {{"name", "identity"}}},
                             {"formula", context.to_string()},
                             {"assign", {{"level", "top"}, {"expr", {{"tensor", factors}}}}}};
      ce.model_spec_json = spec.dump();
      verdict.counterexample = std::move(ce);
      return verdict;
    }
  }
  verdict.status = Verdict::Status::HoldsExhaustively;
  return verdict;
}

}  // namespace hqcl
