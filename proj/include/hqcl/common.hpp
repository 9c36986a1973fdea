#pragma once

#include <complex>
#include <cstdint>

namespace hqcl {

using cxd = std::complex<double>;

// Semantic tolerance for all model-level assertions (probabilities, trace
// norms, projector residuals). Defaults to 1e-9; HQCL_TOL overrides it.
double semantic_tolerance();

// Exact algebraic gate identities are pinned independently of HQCL_TOL.
inline constexpr double kExactTolerance = 1e-12;

// Dense 2^n x 2^n matrices are only ever materialized up to this width;
// larger registers stay in ensemble form.
inline constexpr int kDenseQubitCap = 10;

// Ensemble weights below this are rejected at construction.
inline constexpr double kWeightFloor = 1e-12;

inline std::uint64_t dim_of(int qubits) { return std::uint64_t{1} << qubits; }

// Qubits are numbered 1..n with the first tensor factor most significant,
// so the last qubit is the fastest-varying index bit.
inline int bit_of_qubit(int total_qubits, int qubit) { return total_qubits - qubit; }

}  // namespace hqcl
