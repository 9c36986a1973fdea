#pragma once

#include <span>
#include <vector>

#include "hqcl/qumix.hpp"

namespace hqcl {

// A split of an n-qubit register into consecutive blocks [n1, ..., nt].
class Partition {
 public:
  explicit Partition(std::vector<int> blocks);
  static Partition uniform(int block_count, int block_width = 1);

  int total_qubits() const { return total_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block(int i) const { return blocks_[i - 1]; }  // 1-based, per Red notation
  int block_offset(int i) const { return offsets_[i - 1]; }
  const std::vector<int>& blocks() const { return blocks_; }

 private:
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  int total_;
};

// Reduced state of rho on the selected blocks (1-based, strictly increasing),
// tracing out the rest. Selecting every block returns rho unchanged; proper
// selections come back dense, so their joint width must stay within the cap.
Qumix reduced_state(const Qumix& rho, const Partition& part, std::span<const int> selected);

// Single-qubit reduction of rho onto qubit q (1-based); cheap at any width.
Eigen::Matrix2cd reduce_to_qubit(const Qumix& rho, int qubit);

}  // namespace hqcl
