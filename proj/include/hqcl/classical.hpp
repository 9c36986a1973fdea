#pragma once

#include <map>

#include "hqcl/counterexample.hpp"
#include "hqcl/formula.hpp"

namespace hqcl {

// Two-valued evaluation of a Boolean formula under a 0/1 atom assignment.
// Throws on genuine quantum connectives.
int classical_eval(const Formula& f, const std::map<int, int>& assignment);

// Truth-table consequence: eval(alpha) <= eval(beta) under every assignment.
bool truth_table_entails(const Formula& alpha, const Formula& beta);

// Exhaustive check over register-valued compositional models of the default
// context alpha & beta at the canonical perspective. Agrees with the
// truth-table oracle on the Boolean fragment.
Verdict check_classical_consequence(const Formula& alpha, const Formula& beta);

}  // namespace hqcl
