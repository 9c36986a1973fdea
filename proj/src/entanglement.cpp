#include "hqcl/entanglement.hpp"

#include <stdexcept>

namespace hqcl {

EntanglementReport classify_entanglement(const StateVector& psi, const Partition& part) {
  if (!psi.is_unit(semantic_tolerance()))
    throw std::invalid_argument("entanglement classification needs a unit vector");
  if (part.total_qubits() != psi.qubits())
    throw std::invalid_argument("partition does not match the state dimension");

  const double tol = semantic_tolerance();
  const Qumix proj = Qumix::pure(psi);
  EntanglementReport report;
  report.t_partite_entangled = true;
  report.maximally_entangled = true;

  for (int b = 1; b <= part.block_count(); ++b) {
    const int sel[] = {b};
    Qumix red = reduced_state(proj, part, sel);
    bool mixed = red.purity() < 1.0 - tol;
    report.properly_mixed.push_back(mixed);
    if (mixed) report.entangled_wrt.push_back(b);
    report.t_partite_entangled = report.t_partite_entangled && mixed;

    const auto d = static_cast<Eigen::Index>(dim_of(part.block(b)));
    Eigen::MatrixXcd uniform =
        Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
    if (max_abs_diff(red.to_matrix(), uniform) > tol) report.maximally_entangled = false;
  }
  return report;
}

}  // namespace hqcl
