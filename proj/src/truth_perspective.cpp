#include "hqcl/truth_perspective.hpp"

#include <cmath>
#include <stdexcept>

namespace hqcl {

TruthPerspective::TruthPerspective(const Eigen::Matrix2cd& u) : u_(u) {
  if ((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() >
      semantic_tolerance())
    throw std::invalid_argument("truth-perspective must be unitary");
  is_identity_ = (u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= kExactTolerance;
}

TruthPerspective TruthPerspective::identity() {
  return TruthPerspective(Eigen::Matrix2cd::Identity());
}

TruthPerspective TruthPerspective::hadamard() {
  Eigen::Matrix2cd h;
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return TruthPerspective(h);
}

TruthPerspective TruthPerspective::random(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = cxd{gauss(rng), gauss(rng)};
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  Eigen::Matrix2cd q = qr.householderQ();
  Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) {
    cxd d = r(i, i);
    q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : cxd{1.0, 0.0};
  }
  return TruthPerspective(q);
}

StateVector TruthPerspective::truth_ket() const {
  return StateVector(1, {u_(0, 1), u_(1, 1)});
}

StateVector TruthPerspective::falsity_ket() const {
  return StateVector(1, {u_(0, 0), u_(1, 0)});
}

void TruthPerspective::apply_single(std::span<cxd> amps, int total_qubits, int qubit,
                                    bool adjoint) const {
  const Eigen::Matrix2cd u = adjoint ? Eigen::Matrix2cd(u_.adjoint()) : u_;
  const std::uint64_t step = std::uint64_t{1} << bit_of_qubit(total_qubits, qubit);
  const std::uint64_t dim = amps.size();
  for (std::uint64_t base = 0; base < dim; base += 2 * step)
    for (std::uint64_t i = base; i < base + step; ++i) {
      const cxd a0 = amps[i], a1 = amps[i + step];
      amps[i] = u(0, 0) * a0 + u(0, 1) * a1;
      amps[i + step] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void TruthPerspective::apply_extended(StateVector& psi, bool adjoint) const {
  apply_extended_block(psi.amplitudes(), psi.qubits(), 0, psi.qubits(), adjoint);
}

void TruthPerspective::apply_extended_block(std::span<cxd> amps, int total_qubits, int offset,
                                            int width, bool adjoint) const {
  if (is_identity_) return;
  for (int q = offset + 1; q <= offset + width; ++q)
    apply_single(amps, total_qubits, q, adjoint);
}

Eigen::MatrixXcd TruthPerspective::extend_dense(int n) const {
  if (n > kDenseQubitCap) throw std::invalid_argument("dense extension above the qubit cap");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, u_);
  return out;
}

Eigen::Matrix2cd TruthPerspective::truth_projector_2x2() const {
  Eigen::Vector2cd k(u_(0, 1), u_(1, 1));
  return k * k.adjoint();
}

Eigen::Matrix2cd TruthPerspective::falsity_projector_2x2() const {
  Eigen::Vector2cd k(u_(0, 0), u_(1, 0));
  return k * k.adjoint();
}

Eigen::MatrixXcd TruthPerspective::truth_projector_dense(int n) const {
  if (n > kDenseQubitCap) throw std::invalid_argument("dense projector above the qubit cap");
  const auto d = static_cast<Eigen::Index>(dim_of(n - 1));
  return kron(Eigen::MatrixXcd::Identity(d, d), truth_projector_2x2());
}

Eigen::MatrixXcd TruthPerspective::falsity_projector_dense(int n) const {
  if (n > kDenseQubitCap) throw std::invalid_argument("dense projector above the qubit cap");
  const auto d = static_cast<Eigen::Index>(dim_of(n - 1));
  return kron(Eigen::MatrixXcd::Identity(d, d), falsity_projector_2x2());
}

StateVector t_register(const TruthPerspective& t, std::span<const int> bits) {
  StateVector psi = StateVector::from_bits(bits);
  t.apply_extended(psi, /*adjoint=*/false);
  return psi;
}

double probability(const TruthPerspective& t, const StateVector& psi) {
  return probability_at_qubit(t, Qumix::pure(psi), psi.qubits());
}

double probability(const TruthPerspective& t, const Qumix& rho) {
  return probability_at_qubit(t, rho, rho.qubits());
}

double probability_at_qubit(const TruthPerspective& t, const Qumix& rho, int qubit) {
  const int n = rho.qubits();
  if (qubit < 1 || qubit > n) throw std::invalid_argument("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << bit_of_qubit(n, qubit);
  double p = 0.0;
  if (rho.is_ensemble()) {
    // |<1_T| component|^2 of each member's target qubit.
    const cxd t0 = std::conj(t.matrix()(0, 1)), t1 = std::conj(t.matrix()(1, 1));
    for (const auto& member : rho.members()) {
      const auto amps = member.vec.amplitudes();
      double s = 0.0;
      for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        s += std::norm(t0 * amps[i] + t1 * amps[i | bit]);
      }
      p += member.weight * s;
    }
  } else {
    const Eigen::Matrix2cd q = t.truth_projector_2x2();
    const auto& mat = rho.matrix();
    cxd s{0.0, 0.0};
    for (std::uint64_t i = 0; i < dim_of(n); ++i) {
      if (i & bit) continue;
      const auto i0 = static_cast<Eigen::Index>(i), i1 = static_cast<Eigen::Index>(i | bit);
      s += q(0, 0) * mat(i0, i0) + q(0, 1) * mat(i1, i0) + q(1, 0) * mat(i0, i1) +
           q(1, 1) * mat(i1, i1);
    }
    p = s.real();
  }
  return std::min(1.0, std::max(0.0, p));
}

bool preorder_le(const TruthPerspective& t, const Qumix& rho, const Qumix& sigma) {
  return probability(t, rho) <= probability(t, sigma) + semantic_tolerance();
}

Qumix transport(const TruthPerspective& t, const Qumix& rho) {
  if (t.is_identity()) return rho;
  if (rho.is_ensemble()) {
    std::vector<WeightedVector> members = rho.members();
    for (auto& m : members) t.apply_extended(m.vec, /*adjoint=*/false);
    return Qumix::ensemble(std::move(members));
  }
  const Eigen::MatrixXcd u = t.extend_dense(rho.qubits());
  return Qumix::dense_trusted(u * rho.matrix() * u.adjoint());
}

}  // namespace hqcl
