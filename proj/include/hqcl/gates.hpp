#pragma once

#include <optional>
#include <span>
#include <string>

#include "hqcl/qumix.hpp"
#include "hqcl/truth_perspective.hpp"

namespace hqcl {

enum class GateKind { Not, Toffoli, Xor, SqrtId, SqrtNot };

// One of the five connective gates with its arity parameters. NOT/SQI/SQN use
// n; XOR uses (m, n); the Toffoli uses (m, n, p).
struct GateSpec {
  GateKind kind;
  int m = 0;
  int n = 0;
  int p = 0;

  static GateSpec not_gate(int n) { return {GateKind::Not, 0, n, 0}; }
  static GateSpec toffoli(int m, int n, int p) { return {GateKind::Toffoli, m, n, p}; }
  static GateSpec xor_gate(int m, int n) { return {GateKind::Xor, m, n, 0}; }
  static GateSpec sqrt_id(int n) { return {GateKind::SqrtId, 0, n, 0}; }
  static GateSpec sqrt_not(int n) { return {GateKind::SqrtNot, 0, n, 0}; }

  int width() const;
  std::string name() const;  // "NOT(3)", "T(1,1,1)", "XOR(1,1)", ...
};

// Applies the canonical gate to the block starting at `offset` (0-based) of a
// register with `total_qubits`. All five gates touch at most three qubits of
// their block; everything else passes through.
void apply_gate_block(const GateSpec& g, std::span<cxd> amps, int total_qubits, int offset,
                      bool adjoint);

// Twin gate G_T = T^(w) G T^(w)^dag restricted to the block.
void apply_twin_gate_block(const GateSpec& g, const TruthPerspective& t, std::span<cxd> amps,
                           int total_qubits, int offset, bool adjoint);

// ^D G_T rho = G_T rho G_T^dag on a full register (gate width == rho width).
Qumix apply_gate(const GateSpec& g, const TruthPerspective& t, const Qumix& rho,
                 bool adjoint = false);

// Dense matrix of the twin gate embedded at `offset` in `total_qubits`.
Eigen::MatrixXcd gate_dense(const GateSpec& g, const TruthPerspective& t, int total_qubits,
                            int offset);

// AND_T^(m,n)(rho) = ^D T^(m,n,1)_T (rho (x) ^T P0^(1)).
Qumix and_gate(const TruthPerspective& t, int m, int n, const Qumix& rho);

// Checks T^(m,n,1) == [(I - P1 (x) P1) (x) I] + [P1 (x) P1 (x) NOT] densely.
bool toffoli_decomposition_matches(int m, int n, double tol = kExactTolerance);

}  // namespace hqcl
