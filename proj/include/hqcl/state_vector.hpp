#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hqcl/common.hpp"

namespace hqcl {

// A vector of 2^n complex amplitudes over n qubits. Instances used as
// quregisters are unit vectors; callers that build intermediate vectors may
// hold unnormalized data and normalize explicitly.
class StateVector {
 public:
  StateVector(int qubits, std::vector<cxd> amplitudes);

  static StateVector basis(int qubits, std::uint64_t index);
  static StateVector from_bits(std::span<const int> bits);

  int qubits() const { return qubits_; }
  std::uint64_t dim() const { return amps_.size(); }

  std::span<const cxd> amplitudes() const { return amps_; }
  std::span<cxd> amplitudes() { return amps_; }
  const cxd& operator[](std::uint64_t i) const { return amps_[i]; }

  double norm() const;
  bool is_unit(double tol) const;
  void normalize();

  // <this|other>
  cxd inner(const StateVector& other) const;

 private:
  int qubits_;
  std::vector<cxd> amps_;
};

StateVector tensor(const StateVector& a, const StateVector& b);

}  // namespace hqcl
