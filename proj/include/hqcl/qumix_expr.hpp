#pragma once

#include <nlohmann/json.hpp>

#include "hqcl/model.hpp"

namespace hqcl {

// Qumix expression JSON:
//   {"pure": [[re,im],...]}                  unit vector (length 2^n)
//   {"mixed_id": n}                          (1/2^n) I^(n)
//   {"proj": "0"|"1"}                        ^T P0^(1) / ^T P1^(1)
//   {"tensor": [expr, ...]}
//   {"mix": [[w, expr], ...]}
//   {"apply": {"gate": {"name": ..., "args": [...]},
//              "at": <qubit offset, optional>, "to": expr}}
// Gate names: NOT(n), T(m,n,p), XOR(m,n), SQI(n), SQN(n), AND(m,n); AND grows
// the register by its ancilla. Gates are twinned to the given perspective.
Qumix eval_qumix_expr(const nlohmann::json& expr, const TruthPerspective& t);

// {"name": "identity"|"hadamard"} or {"matrix": [[[re,im],[re,im]],[...]]}.
TruthPerspective perspective_from_json(const nlohmann::json& j);
nlohmann::json perspective_to_json(const TruthPerspective& t);

nlohmann::json state_to_json(const StateVector& psi);
StateVector state_from_json(const nlohmann::json& j);
nlohmann::json qumix_to_expr(const Qumix& rho);

// Model spec: {"truth_perspective": ..., "formula": "<text>",
//              "assign": {"level": <int|"top"|"bottom">, "expr": <qumix-expr>}}
ScopedModel model_from_spec(const nlohmann::json& spec);
nlohmann::json model_to_spec(const ScopedModel& m, int assign_level);

}  // namespace hqcl
