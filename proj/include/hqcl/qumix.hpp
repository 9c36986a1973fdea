#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "hqcl/common.hpp"
#include "hqcl/state_vector.hpp"

namespace hqcl {

struct WeightedVector {
  double weight;
  StateVector vec;
};

// A density operator on n qubits, held either as a weighted ensemble of unit
// vectors or as a dense matrix. Ensembles are mandatory above kDenseQubitCap.
class Qumix {
 public:
  static Qumix pure(StateVector psi);
  static Qumix ensemble(std::vector<WeightedVector> members);
  static Qumix maximally_mixed(int qubits);
  static Qumix basis_projector(int qubits, std::uint64_t index);
  // Validates Hermiticity, positive semidefiniteness and unit trace.
  static Qumix dense(Eigen::MatrixXcd rho);
  // Skips the eigensolve; for matrices produced by operations that preserve
  // validity (partial traces, unitary conjugation).
  static Qumix dense_trusted(Eigen::MatrixXcd rho);

  int qubits() const { return qubits_; }
  bool is_ensemble() const { return dense_.size() == 0; }

  const std::vector<WeightedVector>& members() const;
  const Eigen::MatrixXcd& matrix() const;

  // Materializes the density matrix; only allowed up to kDenseQubitCap.
  Eigen::MatrixXcd to_matrix() const;
  Qumix to_ensemble() const;

  cxd trace() const;
  double purity() const;

 private:
  Qumix() = default;
  int qubits_ = 0;
  std::vector<WeightedVector> members_;
  Eigen::MatrixXcd dense_;
};

Qumix tensor(const Qumix& a, const Qumix& b);

// tr(op * rho); op must match rho's dimension.
cxd expect(const Eigen::MatrixXcd& op, const Qumix& rho);

// ||a - b||_1, the sum of singular values of the difference. Ensemble inputs
// are compared through the Gram matrix of their member vectors, so registers
// beyond the dense cap never materialize.
double trace_norm_diff(const Qumix& a, const Qumix& b);

// Largest absolute entry of a - b (dense regime only).
double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace hqcl
