#include "hqcl/gates.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace hqcl {

int GateSpec::width() const {
  switch (kind) {
    case GateKind::Not:
    case GateKind::SqrtId:
    case GateKind::SqrtNot:
      return n;
    case GateKind::Xor:
      return m + n;
    case GateKind::Toffoli:
      return m + n + p;
  }
  return 0;
}

std::string GateSpec::name() const {
  switch (kind) {
    case GateKind::Not:
      return "NOT(" + std::to_string(n) + ")";
    case GateKind::SqrtId:
      return "SQI(" + std::to_string(n) + ")";
    case GateKind::SqrtNot:
      return "SQN(" + std::to_string(n) + ")";
    case GateKind::Xor:
      return "XOR(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case GateKind::Toffoli:
      return "T(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + ")";
  }
  return "?";
}

namespace {

void flip_qubit(std::span<cxd> amps, int total, int qubit) {
  const std::uint64_t bit = std::uint64_t{1} << bit_of_qubit(total, qubit);
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    if (!(i & bit)) std::swap(amps[i], amps[i | bit]);
}

void controlled_flip(std::span<cxd> amps, int total, int control, int target) {
  const std::uint64_t cb = std::uint64_t{1} << bit_of_qubit(total, control);
  const std::uint64_t tb = std::uint64_t{1} << bit_of_qubit(total, target);
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    if ((i & cb) && !(i & tb)) std::swap(amps[i], amps[i | tb]);
}

void doubly_controlled_flip(std::span<cxd> amps, int total, int c1, int c2, int target) {
  const std::uint64_t b1 = std::uint64_t{1} << bit_of_qubit(total, c1);
  const std::uint64_t b2 = std::uint64_t{1} << bit_of_qubit(total, c2);
  const std::uint64_t tb = std::uint64_t{1} << bit_of_qubit(total, target);
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    if ((i & b1) && (i & b2) && !(i & tb)) std::swap(amps[i], amps[i | tb]);
}

void apply_2x2(std::span<cxd> amps, int total, int qubit, const std::array<cxd, 4>& u) {
  const std::uint64_t step = std::uint64_t{1} << bit_of_qubit(total, qubit);
  for (std::uint64_t base = 0; base < amps.size(); base += 2 * step)
    for (std::uint64_t i = base; i < base + step; ++i) {
      const cxd a0 = amps[i], a1 = amps[i + step];
      amps[i] = u[0] * a0 + u[1] * a1;
      amps[i + step] = u[2] * a0 + u[3] * a1;
    }
}

// Qubits a gate actually touches; everything else in its block passes
// through, so twin conjugation only needs these.
void touched_qubits(const GateSpec& g, int offset, int out[3], int& count) {
  switch (g.kind) {
    case GateKind::Not:
    case GateKind::SqrtId:
    case GateKind::SqrtNot:
      out[0] = offset + g.n;
      count = 1;
      break;
    case GateKind::Xor:
      out[0] = offset + g.m;
      out[1] = offset + g.m + g.n;
      count = 2;
      break;
    case GateKind::Toffoli:
      out[0] = offset + g.m;
      out[1] = offset + g.m + g.n;
      out[2] = offset + g.m + g.n + g.p;
      count = 3;
      break;
  }
}

}  // namespace

void apply_gate_block(const GateSpec& g, std::span<cxd> amps, int total_qubits, int offset,
                      bool adjoint) {
  if (offset < 0 || offset + g.width() > total_qubits)
    throw std::invalid_argument("gate block does not fit the register");
  const double s = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::Not:
      flip_qubit(amps, total_qubits, offset + g.n);
      break;
    case GateKind::Toffoli:
      doubly_controlled_flip(amps, total_qubits, offset + g.m, offset + g.m + g.n,
                             offset + g.m + g.n + g.p);
      break;
    case GateKind::Xor:
      controlled_flip(amps, total_qubits, offset + g.m, offset + g.m + g.n);
      break;
    case GateKind::SqrtId:
      apply_2x2(amps, total_qubits, offset + g.n, {cxd{s, 0}, cxd{s, 0}, cxd{s, 0}, cxd{-s, 0}});
      break;
    case GateKind::SqrtNot: {
      const cxd a = adjoint ? cxd{0.5, 0.5} : cxd{0.5, -0.5};
      const cxd b = adjoint ? cxd{0.5, -0.5} : cxd{0.5, 0.5};
      apply_2x2(amps, total_qubits, offset + g.n, {a, b, b, a});
      break;
    }
  }
}

void apply_twin_gate_block(const GateSpec& g, const TruthPerspective& t, std::span<cxd> amps,
                           int total_qubits, int offset, bool adjoint) {
  if (t.is_identity()) {
    apply_gate_block(g, amps, total_qubits, offset, adjoint);
    return;
  }
  int touched[3];
  int count = 0;
  touched_qubits(g, offset, touched, count);
  for (int i = 0; i < count; ++i) t.apply_single(amps, total_qubits, touched[i], /*adjoint=*/true);
  apply_gate_block(g, amps, total_qubits, offset, adjoint);
  for (int i = 0; i < count; ++i) t.apply_single(amps, total_qubits, touched[i], /*adjoint=*/false);
}

Qumix apply_gate(const GateSpec& g, const TruthPerspective& t, const Qumix& rho, bool adjoint) {
  if (g.width() != rho.qubits())
    throw std::invalid_argument("gate width does not match the qumix dimension");
  if (rho.is_ensemble()) {
    std::vector<WeightedVector> members = rho.members();
    for (auto& m : members)
      apply_twin_gate_block(g, t, m.vec.amplitudes(), rho.qubits(), 0, adjoint);
    return Qumix::ensemble(std::move(members));
  }
  const int n = rho.qubits();
  const auto dim = static_cast<Eigen::Index>(dim_of(n));
  Eigen::MatrixXcd c = rho.matrix();
  for (Eigen::Index j = 0; j < dim; ++j)
    apply_twin_gate_block(g, t, std::span<cxd>(c.col(j).data(), static_cast<std::size_t>(dim)), n,
                          0, adjoint);
  Eigen::MatrixXcd d = c.adjoint();
  for (Eigen::Index j = 0; j < dim; ++j)
    apply_twin_gate_block(g, t, std::span<cxd>(d.col(j).data(), static_cast<std::size_t>(dim)), n,
                          0, adjoint);
  return Qumix::dense_trusted(d.adjoint());
}

Eigen::MatrixXcd gate_dense(const GateSpec& g, const TruthPerspective& t, int total_qubits,
                            int offset) {
  if (total_qubits > kDenseQubitCap)
    throw std::invalid_argument("dense gate materialization above the qubit cap");
  const auto dim = static_cast<Eigen::Index>(dim_of(total_qubits));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    apply_twin_gate_block(g, t, std::span<cxd>(out.col(j).data(), static_cast<std::size_t>(dim)),
                          total_qubits, offset, /*adjoint=*/false);
  return out;
}

Qumix and_gate(const TruthPerspective& t, int m, int n, const Qumix& rho) {
  if (rho.qubits() != m + n)
    throw std::invalid_argument("holistic conjunction needs a qumix on m+n qubits");
  Qumix with_ancilla = tensor(rho, Qumix::pure(t.falsity_ket()));
  return apply_gate(GateSpec::toffoli(m, n, 1), t, with_ancilla);
}

bool toffoli_decomposition_matches(int m, int n, double tol) {
  const int total = m + n + 1;
  if (total > kDenseQubitCap)
    throw std::invalid_argument("decomposition check above the dense qubit cap");
  const TruthPerspective id = TruthPerspective::identity();
  const Eigen::MatrixXcd lhs = gate_dense(GateSpec::toffoli(m, n, 1), id, total, 0);

  const Eigen::MatrixXcd p1m = id.truth_projector_dense(m);
  const Eigen::MatrixXcd p1n = id.truth_projector_dense(n);
  Eigen::Matrix2cd not1;
  not1 << 0, 1, 1, 0;
  const auto dmn = static_cast<Eigen::Index>(dim_of(m + n));
  const Eigen::MatrixXcd p11 = kron(p1m, p1n);
  const Eigen::MatrixXcd rhs =
      kron(Eigen::MatrixXcd::Identity(dmn, dmn) - p11, Eigen::Matrix2cd::Identity()) +
      kron(p11, not1);
  return max_abs_diff(lhs, rhs) <= tol;
}

}  // namespace hqcl
