#pragma once

#include <vector>

#include "hqcl/partition.hpp"
#include "hqcl/state_vector.hpp"

namespace hqcl {

struct EntanglementReport {
  std::vector<bool> properly_mixed;  // per block, purity(Red) < 1 - tol
  bool t_partite_entangled = false;  // every block properly mixed
  bool maximally_entangled = false;  // every Red == I / 2^{n_i}
  std::vector<int> entangled_wrt;    // 1-based indices of properly mixed blocks
};

EntanglementReport classify_entanglement(const StateVector& psi, const Partition& part);

}  // namespace hqcl
