#include "hqcl/qumix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace hqcl {

Qumix Qumix::pure(StateVector psi) {
  if (!psi.is_unit(semantic_tolerance()))
    throw std::invalid_argument("pure qumix member must be a unit vector");
  Qumix q;
  q.qubits_ = psi.qubits();
  q.members_.push_back({1.0, std::move(psi)});
  return q;
}

Qumix Qumix::ensemble(std::vector<WeightedVector> members) {
  if (members.empty()) throw std::invalid_argument("empty ensemble");
  const double tol = semantic_tolerance();
  double total = 0.0;
  int n = members.front().vec.qubits();
  for (const auto& m : members) {
    if (m.weight <= kWeightFloor) throw std::invalid_argument("ensemble weight below floor");
    if (m.vec.qubits() != n) throw std::invalid_argument("mixed dimensions in ensemble");
    if (!m.vec.is_unit(tol)) throw std::invalid_argument("ensemble member is not unit norm");
    total += m.weight;
  }
  if (std::abs(total - 1.0) > tol) throw std::invalid_argument("ensemble weights must sum to 1");
  Qumix q;
  q.qubits_ = n;
  q.members_ = std::move(members);
  return q;
}

Qumix Qumix::maximally_mixed(int qubits) {
  std::vector<WeightedVector> members;
  const double w = 1.0 / static_cast<double>(dim_of(qubits));
  members.reserve(dim_of(qubits));
  for (std::uint64_t i = 0; i < dim_of(qubits); ++i)
    members.push_back({w, StateVector::basis(qubits, i)});
  return ensemble(std::move(members));
}

Qumix Qumix::basis_projector(int qubits, std::uint64_t index) {
  return pure(StateVector::basis(qubits, index));
}

Qumix Qumix::dense(Eigen::MatrixXcd rho) {
  const auto d = rho.rows();
  if (d != rho.cols() || d < 2 || (d & (d - 1)) != 0)
    throw std::invalid_argument("dense qumix must be a square 2^n matrix");
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  if (n > kDenseQubitCap) throw std::invalid_argument("dense qumix exceeds the dense qubit cap");
  const double tol = semantic_tolerance();
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("dense qumix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    throw std::invalid_argument("dense qumix must have trace 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("dense qumix is not positive semidefinite");
  Qumix q;
  q.qubits_ = n;
  q.dense_ = std::move(rho);
  return q;
}

Qumix Qumix::dense_trusted(Eigen::MatrixXcd rho) {
  const auto d = rho.rows();
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  Qumix q;
  q.qubits_ = n;
  q.dense_ = std::move(rho);
  return q;
}

const std::vector<WeightedVector>& Qumix::members() const {
  if (!is_ensemble()) throw std::logic_error("qumix is dense, not an ensemble");
  return members_;
}

const Eigen::MatrixXcd& Qumix::matrix() const {
  if (is_ensemble()) throw std::logic_error("qumix is an ensemble, not dense");
  return dense_;
}

Eigen::MatrixXcd Qumix::to_matrix() const {
  if (!is_ensemble()) return dense_;
  if (qubits_ > kDenseQubitCap)
    throw std::invalid_argument("refusing to materialize a dense matrix above the qubit cap");
  const auto d = static_cast<Eigen::Index>(dim_of(qubits_));
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& m : members_) {
    Eigen::Map<const Eigen::VectorXcd> v(m.vec.amplitudes().data(), d);
    rho.noalias() += m.weight * (v * v.adjoint());
  }
  return rho;
}

Qumix Qumix::to_ensemble() const {
  if (is_ensemble()) return *this;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_);
  std::vector<WeightedVector> members;
  const auto d = dense_.rows();
  for (Eigen::Index k = 0; k < d; ++k) {
    double w = es.eigenvalues()(k);
    if (w <= kWeightFloor) continue;
    std::vector<cxd> amps(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) amps[static_cast<std::size_t>(i)] = es.eigenvectors()(i, k);
    StateVector v(qubits_, std::move(amps));
    v.normalize();
    members.push_back({w, std::move(v)});
  }
  // Renormalize away eigenvalue round-off.
  double total = 0.0;
  for (auto& m : members) total += m.weight;
  for (auto& m : members) m.weight /= total;
  return ensemble(std::move(members));
}

cxd Qumix::trace() const {
  if (is_ensemble()) {
    double s = 0.0;
    for (const auto& m : members_) s += m.weight;
    return cxd{s, 0.0};
  }
  return dense_.trace();
}

double Qumix::purity() const {
  if (!is_ensemble()) return (dense_ * dense_).trace().real();
  // tr(rho^2) = sum_ij w_i w_j |<psi_i|psi_j>|^2
  double s = 0.0;
  const auto& ms = members_;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    s += ms[i].weight * ms[i].weight;
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      double ov = std::norm(ms[i].vec.inner(ms[j].vec));
      s += 2.0 * ms[i].weight * ms[j].weight * ov;
    }
  }
  return s;
}

Qumix tensor(const Qumix& a, const Qumix& b) {
  if (a.is_ensemble() && b.is_ensemble()) {
    std::vector<WeightedVector> members;
    members.reserve(a.members().size() * b.members().size());
    for (const auto& ma : a.members())
      for (const auto& mb : b.members())
        members.push_back({ma.weight * mb.weight, tensor(ma.vec, mb.vec)});
    return Qumix::ensemble(std::move(members));
  }
  const int total = a.qubits() + b.qubits();
  if (total <= kDenseQubitCap) return Qumix::dense_trusted(kron(a.to_matrix(), b.to_matrix()));
  return tensor(a.to_ensemble(), b.to_ensemble());
}

cxd expect(const Eigen::MatrixXcd& op, const Qumix& rho) {
  if (op.rows() != op.cols() ||
      static_cast<std::uint64_t>(op.rows()) != dim_of(rho.qubits()))
    throw std::invalid_argument("operator/state dimension mismatch");
  if (!rho.is_ensemble()) return (op * rho.matrix()).trace();
  cxd s{0.0, 0.0};
  for (const auto& m : rho.members()) {
    Eigen::Map<const Eigen::VectorXcd> v(m.vec.amplitudes().data(), op.rows());
    s += m.weight * (v.adjoint() * (op * v))(0);
  }
  return s;
}

namespace {

double trace_norm_hermitian(const Eigen::MatrixXcd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

// ||sum_k c_k |x_k><x_k|||_1 from the member Gram matrix: the nonzero
// spectrum of X C X^dag equals that of C X^dag X.
double trace_norm_from_members(const std::vector<std::pair<double, const StateVector*>>& members) {
  const auto k = static_cast<Eigen::Index>(members.size());
  Eigen::MatrixXcd gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      gram(i, j) = members[static_cast<std::size_t>(i)].second->inner(
          *members[static_cast<std::size_t>(j)].second);
  Eigen::MatrixXcd cg(k, k);
  for (Eigen::Index i = 0; i < k; ++i) cg.row(i) = members[static_cast<std::size_t>(i)].first * gram.row(i);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(cg, /*computeEigenvectors=*/false);
  double s = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) s += std::abs(es.eigenvalues()(i).real());
  return s;
}

}  // namespace

double trace_norm_diff(const Qumix& a, const Qumix& b) {
  if (a.qubits() != b.qubits()) throw std::invalid_argument("dimension mismatch in trace norm");
  if (a.is_ensemble() && b.is_ensemble()) {
    std::vector<std::pair<double, const StateVector*>> members;
    members.reserve(a.members().size() + b.members().size());
    for (const auto& m : a.members()) members.emplace_back(m.weight, &m.vec);
    for (const auto& m : b.members()) members.emplace_back(-m.weight, &m.vec);
    return trace_norm_from_members(members);
  }
  return trace_norm_hermitian(a.to_matrix() - b.to_matrix());
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace hqcl
