#include "hqcl/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace hqcl {

Partition::Partition(std::vector<int> blocks) : blocks_(std::move(blocks)), total_(0) {
  if (blocks_.empty()) throw std::invalid_argument("empty partition");
  offsets_.reserve(blocks_.size());
  for (int b : blocks_) {
    if (b <= 0) throw std::invalid_argument("partition blocks must be positive");
    offsets_.push_back(total_);
    total_ += b;
  }
}

Partition Partition::uniform(int block_count, int block_width) {
  return Partition(std::vector<int>(static_cast<std::size_t>(block_count), block_width));
}

namespace {

struct BlockSelection {
  int kept_width = 0;
  int traced_width = 0;
  // Per qubit (0-based from the most significant), the destination bit
  // position counted from the destination's own most significant bit.
  std::vector<bool> kept;
  std::vector<int> dest_pos;
};

BlockSelection plan_selection(const Partition& part, std::span<const int> selected) {
  if (selected.empty()) throw std::invalid_argument("empty block selection");
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (selected[i] < 1 || selected[i] > part.block_count())
      throw std::invalid_argument("selected block index out of range");
    if (i > 0 && selected[i] <= selected[i - 1])
      throw std::invalid_argument("selected blocks must be strictly increasing");
  }
  BlockSelection plan;
  const int n = part.total_qubits();
  plan.kept.assign(static_cast<std::size_t>(n), false);
  plan.dest_pos.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> selected_block(static_cast<std::size_t>(part.block_count() + 1), false);
  for (int s : selected) selected_block[static_cast<std::size_t>(s)] = true;
  int q = 0;
  for (int b = 1; b <= part.block_count(); ++b) {
    for (int k = 0; k < part.block(b); ++k, ++q) {
      bool keep = selected_block[static_cast<std::size_t>(b)];
      plan.kept[static_cast<std::size_t>(q)] = keep;
      plan.dest_pos[static_cast<std::size_t>(q)] = keep ? plan.kept_width++ : plan.traced_width++;
    }
  }
  return plan;
}

}  // namespace

Qumix reduced_state(const Qumix& rho, const Partition& part, std::span<const int> selected) {
  if (part.total_qubits() != rho.qubits())
    throw std::invalid_argument("partition does not match the qumix dimension");
  if (static_cast<int>(selected.size()) == part.block_count()) return rho;

  const BlockSelection plan = plan_selection(part, selected);
  const int n = rho.qubits();
  if (plan.kept_width > kDenseQubitCap)
    throw std::invalid_argument("reduced state exceeds the dense qubit cap");
  const auto kd = static_cast<Eigen::Index>(dim_of(plan.kept_width));
  const auto td = static_cast<Eigen::Index>(dim_of(plan.traced_width));

  auto split_index = [&](std::uint64_t i, std::uint64_t& kept_idx, std::uint64_t& traced_idx) {
    kept_idx = 0;
    traced_idx = 0;
    for (int q = 0; q < n; ++q) {
      std::uint64_t bit = (i >> (n - 1 - q)) & 1u;
      if (!bit) continue;
      if (plan.kept[static_cast<std::size_t>(q)])
        kept_idx |= bit << (plan.kept_width - 1 - plan.dest_pos[static_cast<std::size_t>(q)]);
      else
        traced_idx |= bit << (plan.traced_width - 1 - plan.dest_pos[static_cast<std::size_t>(q)]);
    }
  };

  Eigen::MatrixXcd red = Eigen::MatrixXcd::Zero(kd, kd);
  if (rho.is_ensemble()) {
    Eigen::MatrixXcd m(kd, td);
    for (const auto& member : rho.members()) {
      m.setZero();
      const auto amps = member.vec.amplitudes();
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        std::uint64_t kk, tt;
        split_index(i, kk, tt);
        m(static_cast<Eigen::Index>(kk), static_cast<Eigen::Index>(tt)) = amps[i];
      }
      red.noalias() += member.weight * (m * m.adjoint());
    }
  } else {
    // Scatter rows/columns of the dense matrix into (kept, traced) pairs once.
    const auto& mat = rho.matrix();
    const std::uint64_t dim = dim_of(n);
    std::vector<std::uint64_t> kept_of(dim), traced_of(dim);
    for (std::uint64_t i = 0; i < dim; ++i) split_index(i, kept_of[i], traced_of[i]);
    std::vector<std::vector<std::uint64_t>> by_traced(static_cast<std::size_t>(td));
    for (std::uint64_t i = 0; i < dim; ++i)
      by_traced[static_cast<std::size_t>(traced_of[i])].push_back(i);
    for (const auto& group : by_traced)
      for (std::uint64_t r : group)
        for (std::uint64_t c : group)
          red(static_cast<Eigen::Index>(kept_of[r]), static_cast<Eigen::Index>(kept_of[c])) +=
              mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  return Qumix::dense_trusted(std::move(red));
}

Eigen::Matrix2cd reduce_to_qubit(const Qumix& rho, int qubit) {
  const int n = rho.qubits();
  if (qubit < 1 || qubit > n) throw std::invalid_argument("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << bit_of_qubit(n, qubit);
  Eigen::Matrix2cd red = Eigen::Matrix2cd::Zero();
  if (rho.is_ensemble()) {
    for (const auto& member : rho.members()) {
      const auto amps = member.vec.amplitudes();
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        const cxd a0 = amps[i], a1 = amps[i | bit];
        red(0, 0) += member.weight * a0 * std::conj(a0);
        red(0, 1) += member.weight * a0 * std::conj(a1);
        red(1, 0) += member.weight * a1 * std::conj(a0);
        red(1, 1) += member.weight * a1 * std::conj(a1);
      }
    }
  } else {
    const auto& mat = rho.matrix();
    for (std::uint64_t i = 0; i < dim_of(n); ++i) {
      if (i & bit) continue;
      const auto i0 = static_cast<Eigen::Index>(i), i1 = static_cast<Eigen::Index>(i | bit);
      red(0, 0) += mat(i0, i0);
      red(0, 1) += mat(i0, i1);
      red(1, 0) += mat(i1, i0);
      red(1, 1) += mat(i1, i1);
    }
  }
  return red;
}

}  // namespace hqcl
