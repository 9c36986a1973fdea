#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hqcl/formula.hpp"
#include "hqcl/gates.hpp"

namespace hqcl {

// One formula occurrence inside a syntactical tree. Levels use the paper
// orientation: level 1 is the bottom (the whole formula), level `height` the
// top (atomic occurrences). Positions are 1-based within a level; offset is
// the 0-based qubit offset of the occurrence's block.
struct TreeOccurrence {
  int level;
  int position;
  int offset;
  Formula formula;
  int width() const { return formula.atomic_complexity(); }
};

class SyntacticalTree {
 public:
  explicit SyntacticalTree(Formula root);

  const Formula& root() const { return root_; }
  int height() const { return static_cast<int>(levels_.size()); }
  int total_qubits() const { return root_.atomic_complexity(); }

  const std::vector<TreeOccurrence>& level(int paper_level) const;
  std::vector<TreeOccurrence> occurrences_of(const Formula& sub) const;
  // Lowest-level occurrence (first found scanning up from the bottom).
  std::optional<TreeOccurrence> first_occurrence(const Formula& sub) const;

 private:
  Formula root_;
  std::vector<std::vector<TreeOccurrence>> levels_;  // [0] = top level
};

// One tensor-factor of a level gate: a connective gate on a block, or an
// identity block over a repeated occurrence.
struct GateBlock {
  int offset;
  int width;
  std::optional<GateSpec> gate;
};

struct LevelGate {
  int total_qubits = 0;
  std::vector<GateBlock> blocks;
  std::string to_string() const;
};

// Per-level gates of a formula: gate(i) maps the meaning of level i+1 to the
// meaning of level i, for i in [1, height-1].
class GateTree {
 public:
  explicit GateTree(std::vector<LevelGate> gates) : gates_(std::move(gates)) {}
  int count() const { return static_cast<int>(gates_.size()); }
  const LevelGate& gate(int i) const { return gates_[i - 1]; }

 private:
  std::vector<LevelGate> gates_;
};

GateTree compile_gate_tree(const SyntacticalTree& tree);

void apply_level_gate(const LevelGate& g, const TruthPerspective& t, std::span<cxd> amps,
                      int total_qubits, bool adjoint);
Qumix apply_level_gate(const LevelGate& g, const TruthPerspective& t, const Qumix& rho,
                       bool adjoint);

}  // namespace hqcl
