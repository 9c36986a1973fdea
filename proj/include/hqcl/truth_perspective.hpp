#pragma once

#include <Eigen/Dense>
#include <random>
#include <span>

#include "hqcl/qumix.hpp"
#include "hqcl/state_vector.hpp"

namespace hqcl {

// A 2x2 unitary fixing which basis of C^2 counts as Truth/Falsity. Its n-fold
// extension acts qubit-wise and is never materialized beyond the dense cap.
class TruthPerspective {
 public:
  explicit TruthPerspective(const Eigen::Matrix2cd& u);

  static TruthPerspective identity();
  static TruthPerspective hadamard();
  static TruthPerspective random(std::mt19937_64& rng);

  const Eigen::Matrix2cd& matrix() const { return u_; }
  bool is_identity() const { return is_identity_; }

  StateVector truth_ket() const;    // T|1>
  StateVector falsity_ket() const;  // T|0>

  // In-place qubit-wise application of T (or its adjoint) to a register.
  void apply_single(std::span<cxd> amps, int total_qubits, int qubit, bool adjoint) const;
  void apply_extended(StateVector& psi, bool adjoint) const;
  void apply_extended_block(std::span<cxd> amps, int total_qubits, int offset, int width,
                            bool adjoint) const;

  Eigen::MatrixXcd extend_dense(int n) const;
  // ^T P1^(n) = I^(n-1) (x) T|1><1|T^dag, and dually for falsity.
  Eigen::MatrixXcd truth_projector_dense(int n) const;
  Eigen::MatrixXcd falsity_projector_dense(int n) const;
  Eigen::Matrix2cd truth_projector_2x2() const;
  Eigen::Matrix2cd falsity_projector_2x2() const;

 private:
  Eigen::Matrix2cd u_;
  bool is_identity_;
};

// T^(n)|x1,...,xn>
StateVector t_register(const TruthPerspective& t, std::span<const int> bits);

// Prob_T(rho) = tr(^T P1 rho), clamped to [0,1].
double probability(const TruthPerspective& t, const Qumix& rho);
double probability(const TruthPerspective& t, const StateVector& psi);

// tr((I (x) TP1T^dag at `qubit` (x) I) rho): the probability carried by an
// occurrence whose block ends at `qubit`, without forming the reduced state.
double probability_at_qubit(const TruthPerspective& t, const Qumix& rho, int qubit);

bool preorder_le(const TruthPerspective& t, const Qumix& rho, const Qumix& sigma);

// T^(n) rho T^(n)^dag
Qumix transport(const TruthPerspective& t, const Qumix& rho);

}  // namespace hqcl
