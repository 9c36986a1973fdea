#include "hqcl/random_gen.hpp"

#include <array>
#include <cmath>

namespace hqcl {

StateVector random_pure(std::mt19937_64& rng, int qubits) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cxd> amps(dim_of(qubits));
  for (cxd& a : amps) a = cxd{gauss(rng), gauss(rng)};
  StateVector psi(qubits, std::move(amps));
  psi.normalize();
  return psi;
}

Qumix random_qumix(std::mt19937_64& rng, int qubits, int max_members) {
  std::uniform_int_distribution<int> count(1, max_members);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  const int k = count(rng);
  std::vector<WeightedVector> members;
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    double w = unit(rng);
    total += w;
    members.push_back({w, random_pure(rng, qubits)});
  }
  for (auto& m : members) m.weight /= total;
  return Qumix::ensemble(std::move(members));
}

ScopedModel random_compositional_model(std::mt19937_64& rng, const TruthPerspective& t,
                                       const Formula& context) {
  std::map<int, Qumix> meanings;
  for (int id : context.atoms()) meanings.emplace(id, random_qumix(rng, 1, 2));
  return ScopedModel::compositional(t, context, meanings);
}

ScopedModel random_entangled_model(std::mt19937_64& rng, const TruthPerspective& t,
                                   const Formula& context) {
  SyntacticalTree tree(context);
  const auto& top = tree.level(tree.height());
  const int n = tree.total_qubits();

  std::vector<int> atom_columns;  // 0-based qubit index per top-level atom
  // Per constant column, the 2-vector T|0> or T|1>.
  std::vector<std::pair<int, std::array<cxd, 2>>> constants;
  for (const TreeOccurrence& occ : top) {
    if (occ.formula.kind() == FormulaKind::Atom) {
      atom_columns.push_back(occ.offset);
    } else {
      const StateVector ket =
          occ.formula.kind() == FormulaKind::True ? t.truth_ket() : t.falsity_ket();
      constants.push_back({occ.offset, {ket[0], ket[1]}});
    }
  }

  const int k = static_cast<int>(atom_columns.size());
  StateVector phi = k > 0 ? random_pure(rng, k) : StateVector::basis(1, 0);
  std::vector<cxd> amps(dim_of(n));
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    std::uint64_t atom_idx = 0;
    for (int c : atom_columns) atom_idx = (atom_idx << 1) | ((i >> (n - 1 - c)) & 1u);
    cxd a = k > 0 ? phi[atom_idx] : cxd{1.0, 0.0};
    for (const auto& [col, ket] : constants) a *= ket[(i >> (n - 1 - col)) & 1u];
    amps[i] = a;
  }
  StateVector psi(n, std::move(amps));
  return ScopedModel(t, context, tree.height(), Qumix::pure(std::move(psi)));
}

Formula random_boolean_formula(std::mt19937_64& rng, const std::vector<int>& atom_pool,
                               int max_connectives, bool allow_toffoli) {
  std::uniform_int_distribution<int> leaf_kind(0, 7);
  std::uniform_int_distribution<std::size_t> pick_atom(0, atom_pool.size() - 1);
  auto leaf = [&]() -> Formula {
    const int k = leaf_kind(rng);
    if (k == 0) return Formula::t();
    if (k == 1) return Formula::f();
    return Formula::atom(atom_pool[pick_atom(rng)]);
  };
  if (max_connectives <= 0) return leaf();
  std::uniform_int_distribution<int> conn(0, allow_toffoli ? 4 : 3);
  std::uniform_int_distribution<int> split(0, max_connectives - 1);
  const int budget = max_connectives - 1;
  switch (conn(rng)) {
    case 0:
      return Formula::not_of(random_boolean_formula(rng, atom_pool, budget, allow_toffoli));
    case 1: {
      const int left = split(rng);
      return Formula::and_of(random_boolean_formula(rng, atom_pool, left, allow_toffoli),
                             random_boolean_formula(rng, atom_pool, budget - left, allow_toffoli));
    }
    case 2: {
      const int left = split(rng);
      return Formula::or_of(random_boolean_formula(rng, atom_pool, left, allow_toffoli),
                            random_boolean_formula(rng, atom_pool, budget - left, allow_toffoli));
    }
    case 3: {
      const int left = split(rng);
      return Formula::xor_of(random_boolean_formula(rng, atom_pool, left, allow_toffoli),
                             random_boolean_formula(rng, atom_pool, budget - left, allow_toffoli));
    }
    default: {
      const int left = split(rng);
      const int right = budget - left > 0 ? std::uniform_int_distribution<int>(0, budget - left)(rng) : 0;
      return Formula::toffoli_of(
          random_boolean_formula(rng, atom_pool, left, allow_toffoli),
          random_boolean_formula(rng, atom_pool, right, allow_toffoli),
          random_boolean_formula(rng, atom_pool, budget - left - right, allow_toffoli));
    }
  }
}

}  // namespace hqcl
