#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hqcl/model.hpp"

namespace hqcl {

StateVector random_pure(std::mt19937_64& rng, int qubits);
// Mixture of 1..max_members random pure states with normalized weights.
Qumix random_qumix(std::mt19937_64& rng, int qubits, int max_members = 4);

ScopedModel random_compositional_model(std::mt19937_64& rng, const TruthPerspective& t,
                                       const Formula& context);

// Random pure seed over the atom columns of the top level, with exact
// T|0>/T|1> factors at constant columns. Valid whenever no atom repeats;
// callers reject the rest through validate().
ScopedModel random_entangled_model(std::mt19937_64& rng, const TruthPerspective& t,
                                   const Formula& context);

// Random Boolean formula over the given atom pool with at most max_connectives
// parser-level connectives (~, &, |, (+), and T(.,.,.) when allow_toffoli).
Formula random_boolean_formula(std::mt19937_64& rng, const std::vector<int>& atom_pool,
                               int max_connectives, bool allow_toffoli = true);

}  // namespace hqcl
