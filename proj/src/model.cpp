#include "hqcl/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace hqcl {

namespace {

double trace_norm_2x2(const Eigen::Matrix2cd& m) {
  const cxd half_tr = 0.5 * (m(0, 0) + m(1, 1));
  const cxd half_diff = 0.5 * (m(0, 0) - m(1, 1));
  const cxd disc = std::sqrt(half_diff * half_diff + m(0, 1) * m(1, 0));
  return std::abs(half_tr + disc) + std::abs(half_tr - disc);
}

Partition level_partition(const std::vector<TreeOccurrence>& level) {
  std::vector<int> blocks;
  blocks.reserve(level.size());
  for (const TreeOccurrence& occ : level) blocks.push_back(occ.width());
  return Partition(std::move(blocks));
}

}  // namespace

ScopedModel::ScopedModel(TruthPerspective t, SyntacticalTree tree)
    : perspective_(std::move(t)), tree_(std::move(tree)), gate_tree_(compile_gate_tree(tree_)) {}

ScopedModel::ScopedModel(TruthPerspective t, Formula context, int seed_level, Qumix seed)
    : ScopedModel(std::move(t), SyntacticalTree(std::move(context))) {
  if (seed_level < 1 || seed_level > tree_.height())
    throw std::invalid_argument("seed level out of range");
  if (seed.qubits() != tree_.total_qubits())
    throw std::invalid_argument("seed does not live in the context's semantic space");
  meanings_.resize(static_cast<std::size_t>(tree_.height()), seed);
  meanings_[static_cast<std::size_t>(seed_level - 1)] = std::move(seed);
  fill_from(seed_level);
}

void ScopedModel::fill_from(int seed_level) {
  for (int l = seed_level - 1; l >= 1; --l)
    meanings_[static_cast<std::size_t>(l - 1)] = apply_level_gate(
        gate_tree_.gate(l), perspective_, meanings_[static_cast<std::size_t>(l)], false);
  for (int l = seed_level + 1; l <= tree_.height(); ++l)
    meanings_[static_cast<std::size_t>(l - 1)] = apply_level_gate(
        gate_tree_.gate(l - 1), perspective_, meanings_[static_cast<std::size_t>(l - 2)], true);
}

ScopedModel ScopedModel::compositional(TruthPerspective t, Formula context,
                                       const std::map<int, Qumix>& atom_meanings) {
  SyntacticalTree tree(context);
  const auto& top = tree.level(tree.height());
  std::optional<Qumix> seed;
  for (const TreeOccurrence& occ : top) {
    Qumix part = [&]() -> Qumix {
      switch (occ.formula.kind()) {
        case FormulaKind::Atom: {
          auto it = atom_meanings.find(occ.formula.atom_id());
          if (it == atom_meanings.end())
            throw std::invalid_argument("missing meaning for atom q" +
                                        std::to_string(occ.formula.atom_id()));
          if (it->second.qubits() != 1)
            throw std::invalid_argument("atom meanings must be single-qubit qumixes");
          return it->second;
        }
        case FormulaKind::True:
          return Qumix::pure(t.truth_ket());
        default:
          return Qumix::pure(t.falsity_ket());
      }
    }();
    seed = seed ? tensor(*seed, part) : std::move(part);
  }
  return ScopedModel(std::move(t), std::move(context), tree.height(), std::move(*seed));
}

Qumix ScopedModel::contextual_meaning(const TreeOccurrence& occ) const {
  const auto& level = tree_.level(occ.level);
  if (occ.position < 1 || occ.position > static_cast<int>(level.size()) ||
      level[static_cast<std::size_t>(occ.position - 1)].formula != occ.formula)
    throw std::invalid_argument("stale occurrence handle");
  const int sel[] = {occ.position};
  return reduced_state(level_meaning(occ.level), level_partition(level), sel);
}

Qumix ScopedModel::contextual_meaning(const Formula& sub) const {
  auto occ = tree_.first_occurrence(sub);
  if (!occ) throw std::invalid_argument("formula does not occur in the context");
  return contextual_meaning(*occ);
}

Qumix ScopedModel::joint_contextual_meaning(int level, std::span<const int> positions) const {
  return reduced_state(level_meaning(level), level_partition(tree_.level(level)), positions);
}

double ScopedModel::probability_of(const TreeOccurrence& occ) const {
  return probability_at_qubit(perspective_, level_meaning(occ.level), occ.offset + occ.width());
}

double ScopedModel::probability_of(const Formula& sub) const {
  auto occ = tree_.first_occurrence(sub);
  if (!occ) throw std::invalid_argument("formula does not occur in the context");
  return probability_of(*occ);
}

Eigen::Matrix2cd ScopedModel::generalized_truth_value(const TreeOccurrence& occ) const {
  return reduce_to_qubit(level_meaning(occ.level), occ.offset + occ.width());
}

bool ScopedModel::is_true(double tol) const {
  const TreeOccurrence& root = tree_.level(1).front();
  return std::abs(probability_of(root) - 1.0) <= tol;
}

ModelDiagnostics ScopedModel::validate() const {
  ModelDiagnostics diag;
  const double tol = semantic_tolerance();

  for (int l = 1; l < tree_.height(); ++l) {
    Qumix expected = apply_level_gate(gate_tree_.gate(l), perspective_,
                                      meanings_[static_cast<std::size_t>(l)], false);
    diag.max_linkage_residual = std::max(
        diag.max_linkage_residual,
        trace_norm_diff(expected, meanings_[static_cast<std::size_t>(l - 1)]));
  }

  const Eigen::Matrix2cd p1 = perspective_.truth_projector_2x2();
  const Eigen::Matrix2cd p0 = perspective_.falsity_projector_2x2();
  std::map<std::string, std::pair<TreeOccurrence, Qumix>> group_first;
  for (int l = 1; l <= tree_.height(); ++l) {
    for (const TreeOccurrence& occ : tree_.level(l)) {
      if (occ.formula.kind() == FormulaKind::True || occ.formula.kind() == FormulaKind::False) {
        const Eigen::Matrix2cd red = reduce_to_qubit(level_meaning(l), occ.offset + 1);
        const Eigen::Matrix2cd target = occ.formula.kind() == FormulaKind::True ? p1 : p0;
        const double residual = trace_norm_2x2(red - target);
        if (residual > tol) diag.constant_violations.push_back({occ, residual});
        continue;
      }
      // Normality: all occurrences of one subformula share a contextual meaning.
      if (occ.width() > kDenseQubitCap) {
        if (tree_.occurrences_of(occ.formula).size() > 1)
          diag.notes.push_back("normality of " + occ.formula.to_string() +
                               " not checkable above the dense qubit cap");
        continue;
      }
      const std::string key = occ.formula.to_string();
      auto it = group_first.find(key);
      if (it == group_first.end()) {
        bool repeats = tree_.occurrences_of(occ.formula).size() > 1;
        if (repeats) group_first.emplace(key, std::make_pair(occ, contextual_meaning(occ)));
        continue;
      }
      const double residual = trace_norm_diff(it->second.second, contextual_meaning(occ));
      if (residual > tol)
        diag.normality_violations.push_back({key, it->second.first, occ, residual});
    }
  }

  if (tree_.total_qubits() <= kDenseQubitCap) {
    bool comp = true;
    for (int l = 1; l <= tree_.height() && comp; ++l) {
      std::optional<Eigen::MatrixXcd> product;
      for (const TreeOccurrence& occ : tree_.level(l)) {
        Eigen::MatrixXcd part = contextual_meaning(occ).to_matrix();
        product = product ? kron(*product, part) : std::move(part);
      }
      comp = trace_norm_diff(Qumix::dense_trusted(*product), level_meaning(l)) <= tol;
    }
    diag.compositional = comp;
  } else {
    diag.notes.push_back("compositionality not evaluated above the dense qubit cap");
  }
  return diag;
}

std::vector<std::string> ModelDiagnostics::describe() const {
  std::vector<std::string> out;
  out.push_back("max linkage residual: " + std::to_string(max_linkage_residual));
  for (const auto& v : constant_violations)
    out.push_back("constant " + v.occ.formula.to_string() + " at level " +
                  std::to_string(v.occ.level) + " position " + std::to_string(v.occ.position) +
                  " deviates by " + std::to_string(v.residual));
  for (const auto& v : normality_violations)
    out.push_back("occurrences of " + v.formula + " at levels " + std::to_string(v.first.level) +
                  "/" + std::to_string(v.second.level) + " differ by " +
                  std::to_string(v.residual));
  if (compositional) out.push_back(*compositional ? "compositional" : "not compositional");
  for (const auto& n : notes) out.push_back(n);
  return out;
}

bool consequence_in_context(const ScopedModel& m, const Formula& alpha, const Formula& beta) {
  return m.probability_of(alpha) <= m.probability_of(beta) + semantic_tolerance();
}

ScopedModel extend_model(const ScopedModel& base, const Formula& beta,
                         const std::map<int, Qumix>& beta_atom_meanings) {
  const std::vector<int> base_atoms = base.context().atoms();
  for (int id : beta.atoms())
    if (std::binary_search(base_atoms.begin(), base_atoms.end(), id))
      throw std::invalid_argument("extension formula shares atom q" + std::to_string(id) +
                                  " with the context (unsupported)");

  const Formula delta = Formula::and_of(base.context(), beta);
  SyntacticalTree tree(delta);
  const auto& top = tree.level(tree.height());
  const std::size_t base_count = base.tree().level(base.tree().height()).size();

  Qumix seed = base.level_meaning(base.tree().height());
  for (std::size_t i = base_count; i + 1 < top.size(); ++i) {
    const Formula& f = top[i].formula;
    Qumix part = [&]() -> Qumix {
      switch (f.kind()) {
        case FormulaKind::Atom:
          return beta_atom_meanings.at(f.atom_id());
        case FormulaKind::True:
          return Qumix::pure(base.perspective().truth_ket());
        default:
          return Qumix::pure(base.perspective().falsity_ket());
      }
    }();
    seed = tensor(seed, part);
  }
  seed = tensor(seed, Qumix::pure(base.perspective().falsity_ket()));  // the ancilla
  return ScopedModel(base.perspective(), delta, tree.height(), std::move(seed));
}

ScopedModel transport_model(const ScopedModel& canonical, const TruthPerspective& t) {
  if (!canonical.perspective().is_identity())
    throw std::invalid_argument("transport starts from a canonical model");
  Qumix bottom = transport(t, canonical.level_meaning(1));
  return ScopedModel(t, canonical.context(), 1, std::move(bottom));
}

}  // namespace hqcl
