#include "hqcl/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace hqcl {

StateVector::StateVector(int qubits, std::vector<cxd> amplitudes)
    : qubits_(qubits), amps_(std::move(amplitudes)) {
  if (qubits < 1) throw std::invalid_argument("state vector needs at least one qubit");
  if (amps_.size() != dim_of(qubits))
    throw std::invalid_argument("amplitude count must be 2^qubits");
}

StateVector StateVector::basis(int qubits, std::uint64_t index) {
  if (index >= dim_of(qubits)) throw std::invalid_argument("basis index out of range");
  std::vector<cxd> amps(dim_of(qubits), cxd{0.0, 0.0});
  amps[index] = cxd{1.0, 0.0};
  return StateVector(qubits, std::move(amps));
}

StateVector StateVector::from_bits(std::span<const int> bits) {
  if (bits.empty()) throw std::invalid_argument("empty bit string");
  std::uint64_t index = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
    index = (index << 1) | static_cast<std::uint64_t>(b);
  }
  return basis(static_cast<int>(bits.size()), index);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cxd& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

bool StateVector::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

void StateVector::normalize() {
  double n = norm();
  if (n <= 0) throw std::runtime_error("cannot normalize the zero vector");
  for (cxd& a : amps_) a /= n;
}

cxd StateVector::inner(const StateVector& other) const {
  if (other.qubits_ != qubits_) throw std::invalid_argument("dimension mismatch in inner product");
  cxd s{0.0, 0.0};
  for (std::uint64_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
  return s;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<cxd> out(a.dim() * b.dim());
  for (std::uint64_t i = 0; i < a.dim(); ++i)
    for (std::uint64_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return StateVector(a.qubits() + b.qubits(), std::move(out));
}

}  // namespace hqcl
