#include "hqcl/syntax_tree.hpp"

#include <stdexcept>

namespace hqcl {

SyntacticalTree::SyntacticalTree(Formula root) : root_(std::move(root)) {
  // Grow upward from the bottom by dropping principal connectives and
  // repeating atomic formulas, until only atoms remain.
  std::vector<std::vector<Formula>> rows;
  rows.push_back({root_});
  while (true) {
    const std::vector<Formula>& cur = rows.back();
    bool molecular = false;
    std::vector<Formula> next;
    for (const Formula& f : cur) {
      if (f.is_atomic()) {
        next.push_back(f);
      } else {
        molecular = true;
        for (int i = 0; i < f.arity(); ++i) next.push_back(f.child(i));
      }
    }
    if (!molecular) break;
    rows.push_back(std::move(next));
  }
  // Store top-down; the public accessor speaks paper numbering.
  levels_.resize(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int paper_level = static_cast<int>(r) + 1;
    std::vector<TreeOccurrence>& level = levels_[rows.size() - 1 - r];
    int offset = 0;
    int position = 1;
    for (const Formula& f : rows[r]) {
      level.push_back({paper_level, position++, offset, f});
      offset += f.atomic_complexity();
    }
  }
}

const std::vector<TreeOccurrence>& SyntacticalTree::level(int paper_level) const {
  if (paper_level < 1 || paper_level > height())
    throw std::invalid_argument("level out of range");
  return levels_[levels_.size() - static_cast<std::size_t>(paper_level)];
}

std::vector<TreeOccurrence> SyntacticalTree::occurrences_of(const Formula& sub) const {
  std::vector<TreeOccurrence> out;
  for (int l = 1; l <= height(); ++l)
    for (const TreeOccurrence& occ : level(l))
      if (occ.formula == sub) out.push_back(occ);
  return out;
}

std::optional<TreeOccurrence> SyntacticalTree::first_occurrence(const Formula& sub) const {
  for (int l = 1; l <= height(); ++l)
    for (const TreeOccurrence& occ : level(l))
      if (occ.formula == sub) return occ;
  return std::nullopt;
}

std::string LevelGate::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += " (x) ";
    if (blocks[i].gate)
      out += blocks[i].gate->name();
    else
      out += "I(" + std::to_string(blocks[i].width) + ")";
  }
  return out;
}

GateTree compile_gate_tree(const SyntacticalTree& tree) {
  std::vector<LevelGate> gates;
  gates.reserve(static_cast<std::size_t>(tree.height() - 1));
  for (int l = 1; l < tree.height(); ++l) {
    LevelGate g;
    g.total_qubits = tree.total_qubits();
    for (const TreeOccurrence& occ : tree.level(l)) {
      GateBlock block{occ.offset, occ.width(), std::nullopt};
      const Formula& f = occ.formula;
      switch (f.kind()) {
        case FormulaKind::Not:
          block.gate = GateSpec::not_gate(f.child(0).atomic_complexity());
          break;
        case FormulaKind::SqrtId:
          block.gate = GateSpec::sqrt_id(f.child(0).atomic_complexity());
          break;
        case FormulaKind::SqrtNot:
          block.gate = GateSpec::sqrt_not(f.child(0).atomic_complexity());
          break;
        case FormulaKind::Toffoli:
          block.gate = GateSpec::toffoli(f.child(0).atomic_complexity(),
                                         f.child(1).atomic_complexity(),
                                         f.child(2).atomic_complexity());
          break;
        case FormulaKind::Xor:
          block.gate = GateSpec::xor_gate(f.child(0).atomic_complexity(),
                                          f.child(1).atomic_complexity());
          break;
        default:
          break;  // atomic: identity block
      }
      g.blocks.push_back(block);
    }
    gates.push_back(std::move(g));
  }
  return GateTree(std::move(gates));
}

void apply_level_gate(const LevelGate& g, const TruthPerspective& t, std::span<cxd> amps,
                      int total_qubits, bool adjoint) {
  for (const GateBlock& b : g.blocks)
    if (b.gate) apply_twin_gate_block(*b.gate, t, amps, total_qubits, b.offset, adjoint);
}

Qumix apply_level_gate(const LevelGate& g, const TruthPerspective& t, const Qumix& rho,
                       bool adjoint) {
  if (g.total_qubits != rho.qubits())
    throw std::invalid_argument("level gate does not match the qumix dimension");
  if (rho.is_ensemble()) {
    std::vector<WeightedVector> members = rho.members();
    for (auto& m : members) apply_level_gate(g, t, m.vec.amplitudes(), rho.qubits(), adjoint);
    return Qumix::ensemble(std::move(members));
  }
  const auto dim = static_cast<Eigen::Index>(dim_of(rho.qubits()));
  Eigen::MatrixXcd c = rho.matrix();
  for (Eigen::Index j = 0; j < dim; ++j)
    apply_level_gate(g, t, std::span<cxd>(c.col(j).data(), static_cast<std::size_t>(dim)),
                     rho.qubits(), adjoint);
  Eigen::MatrixXcd d = c.adjoint();
  for (Eigen::Index j = 0; j < dim; ++j)
    apply_level_gate(g, t, std::span<cxd>(d.col(j).data(), static_cast<std::size_t>(dim)),
                     rho.qubits(), adjoint);
  return Qumix::dense_trusted(d.adjoint());
}

}  // namespace hqcl
