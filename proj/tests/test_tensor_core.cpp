#include <catch2/catch_amalgamated.hpp>

#include "dense_oracle.hpp"
#include "hqcl/entanglement.hpp"
#include "hqcl/partition.hpp"
#include "hqcl/qumix.hpp"
#include "hqcl/random_gen.hpp"
#include "hqcl/truth_perspective.hpp"

using namespace hqcl;

namespace {
const double kTol = 1e-9;
const double kInv = 1.0 / std::sqrt(2.0);

StateVector bell() { return StateVector(2, {cxd{kInv, 0}, {}, {}, cxd{kInv, 0}}); }
StateVector ghz() { return StateVector(3, {cxd{kInv, 0}, {}, {}, {}, {}, {}, {}, cxd{kInv, 0}}); }
}  // namespace

TEST_CASE("tensor product index convention", "[tensor-core]") {
  // |0> (x) |1> lands at basis index 1 of dim 4: the last qubit is fastest.
  const StateVector v = tensor(StateVector::basis(1, 0), StateVector::basis(1, 1));
  REQUIRE(v.qubits() == 2);
  REQUIRE(std::abs(v[1] - cxd{1, 0}) < 1e-15);
  REQUIRE(std::abs(v[0]) < 1e-15);

  const Qumix quarter = tensor(Qumix::maximally_mixed(1), Qumix::maximally_mixed(1));
  REQUIRE(max_abs_diff(quarter.to_matrix(), oracle::eye(2) / 4.0) < 1e-12);

  // P0 (x) P1 -> diag(0,1,0,0), frozen from the 4x4 Kronecker computation.
  const Qumix p0p1 = tensor(Qumix::basis_projector(1, 0), Qumix::basis_projector(1, 1));
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 4);
  expected(1, 1) = 1.0;
  REQUIRE(max_abs_diff(p0p1.to_matrix(), expected) < 1e-12);
}

TEST_CASE("trace and purity", "[tensor-core]") {
  REQUIRE(Qumix::pure(bell()).trace().real() == Catch::Approx(1.0));
  REQUIRE(Qumix::maximally_mixed(2).trace().real() == Catch::Approx(1.0));
  REQUIRE(Qumix::pure(bell()).purity() == Catch::Approx(1.0));
  REQUIRE(Qumix::maximally_mixed(1).purity() == Catch::Approx(0.5));
  REQUIRE(Qumix::maximally_mixed(2).purity() == Catch::Approx(0.25));
}

TEST_CASE("reduced states of entangled pairs", "[tensor-core]") {
  const Partition part({1, 1});
  const int first[] = {1}, second[] = {2};
  const Eigen::MatrixXcd half = oracle::eye(1) / 2.0;
  REQUIRE(max_abs_diff(reduced_state(Qumix::pure(bell()), part, first).to_matrix(), half) < kTol);
  REQUIRE(max_abs_diff(reduced_state(Qumix::pure(bell()), part, second).to_matrix(), half) < kTol);

  const Partition three({1, 1, 1});
  for (int b = 1; b <= 3; ++b) {
    const int sel[] = {b};
    REQUIRE(max_abs_diff(reduced_state(Qumix::pure(ghz()), three, sel).to_matrix(), half) < kTol);
  }
}

TEST_CASE("reduced state of a product returns the selected factors", "[tensor-core]") {
  std::mt19937_64 rng(7);
  const Qumix a = random_qumix(rng, 1), b = random_qumix(rng, 2), c = random_qumix(rng, 1);
  const Qumix prod = tensor(tensor(a, b), c);
  const Partition part({1, 2, 1});
  const int mid[] = {2};
  REQUIRE(max_abs_diff(reduced_state(prod, part, mid).to_matrix(), b.to_matrix()) < kTol);
  const int outer[] = {1, 3};
  REQUIRE(max_abs_diff(reduced_state(prod, part, outer).to_matrix(),
                       tensor(a, c).to_matrix()) < kTol);
}

TEST_CASE("non-contiguous selections against the dense oracle", "[tensor-core]") {
  std::mt19937_64 rng(11);
  const Qumix rho = random_qumix(rng, 4);
  const Eigen::MatrixXcd mat = rho.to_matrix();
  const Partition part({1, 1, 1, 1});
  const int sel[] = {1, 3};
  // Independent route: reorder qubits densely, then trace the tail.
  Eigen::MatrixXcd red = Eigen::MatrixXcd::Zero(4, 4);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a3 = 0; a3 < 2; ++a3)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b3 = 0; b3 < 2; ++b3)
          for (int x2 = 0; x2 < 2; ++x2)
            for (int x4 = 0; x4 < 2; ++x4)
              red(2 * a1 + a3, 2 * b1 + b3) +=
                  mat(8 * a1 + 4 * x2 + 2 * a3 + x4, 8 * b1 + 4 * x2 + 2 * b3 + x4);
  REQUIRE(max_abs_diff(reduced_state(rho, part, sel).to_matrix(), red) < 1e-12);
}

TEST_CASE("expectation values", "[tensor-core]") {
  REQUIRE(expect(oracle::eye(2), Qumix::pure(bell())).real() == Catch::Approx(1.0));
  REQUIRE(expect(oracle::p1_dense(1), Qumix::maximally_mixed(1)).real() == Catch::Approx(0.5));
  // P1^(2) on |01>: the last qubit is 1.
  REQUIRE(expect(oracle::p1_dense(2), Qumix::basis_projector(2, 1)).real() ==
          Catch::Approx(1.0));
  REQUIRE_THROWS_AS(expect(oracle::eye(3), Qumix::pure(bell())), std::invalid_argument);
}

TEST_CASE("block-observable identity for reduced states", "[tensor-core]") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int iter = 0; iter < 40; ++iter) {
    const int m = 1 + static_cast<int>(rng() % 3), p = 1 + static_cast<int>(rng() % 3);
    const auto dm = Eigen::Index{1} << m;
    Eigen::MatrixXcd a(dm, dm);
    for (Eigen::Index r = 0; r < dm; ++r)
      for (Eigen::Index c = 0; c < dm; ++c) a(r, c) = cxd{gauss(rng), gauss(rng)};
    a = (a + a.adjoint()).eval();
    const Qumix rho = random_qumix(rng, m + p);
    const Partition part({m, p});
    const int first[] = {1};
    const double lhs = expect(oracle::kp(a, oracle::eye(p)), rho).real();
    const double rhs = expect(a, reduced_state(rho, part, first)).real();
    REQUIRE(std::abs(lhs - rhs) < kTol);
  }
}

TEST_CASE("ensemble and dense representations agree", "[tensor-core]") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    const Qumix ens = random_qumix(rng, 3);
    const Qumix den = Qumix::dense(ens.to_matrix());
    REQUIRE(std::abs(ens.purity() - den.purity()) < kTol);
    REQUIRE(std::abs(ens.trace().real() - den.trace().real()) < 1e-12);
    const TruthPerspective t = TruthPerspective::random(rng);
    REQUIRE(std::abs(probability(t, ens) - probability(t, den)) < 1e-12);
    const Partition part({1, 2});
    const int sel[] = {2};
    REQUIRE(max_abs_diff(reduced_state(ens, part, sel).to_matrix(),
                         reduced_state(den, part, sel).to_matrix()) < kTol);
    REQUIRE(trace_norm_diff(ens, den) < kTol);
  }
}

TEST_CASE("partial trace preserves density-operator structure", "[tensor-core]") {
  std::mt19937_64 rng(19);
  for (int iter = 0; iter < 20; ++iter) {
    const Qumix rho = random_qumix(rng, 4);
    const Partition part({2, 2});
    const int sel[] = {1};
    const Eigen::MatrixXcd red = reduced_state(rho, part, sel).to_matrix();
    REQUIRE(std::abs(red.trace().real() - 1.0) < kTol);
    REQUIRE(max_abs_diff(red, red.adjoint()) < kTol);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(red, Eigen::EigenvaluesOnly);
    REQUIRE(es.eigenvalues().minCoeff() > -kTol);
  }
}

TEST_CASE("entanglement classification", "[tensor-core]") {
  const Partition part({1, 1, 1});
  const EntanglementReport g = classify_entanglement(ghz(), part);
  REQUIRE(g.t_partite_entangled);
  REQUIRE(g.maximally_entangled);

  const StateVector partial(3, {cxd{kInv, 0}, {}, {}, {}, {}, {}, cxd{kInv, 0}, {}});
  const EntanglementReport p = classify_entanglement(partial, part);
  REQUIRE(p.entangled_wrt == std::vector<int>{1, 2});
  REQUIRE_FALSE(p.properly_mixed[2]);

  const EntanglementReport c = classify_entanglement(StateVector::basis(3, 0), part);
  REQUIRE(c.entangled_wrt.empty());
}

TEST_CASE("classification is basis independent", "[tensor-core]") {
  std::mt19937_64 rng(23);
  const Partition part({1, 2});
  for (int iter = 0; iter < 15; ++iter) {
    StateVector psi = random_pure(rng, 3);
    const EntanglementReport before = classify_entanglement(psi, part);
    const TruthPerspective t = TruthPerspective::random(rng);
    t.apply_extended(psi, false);
    const EntanglementReport after = classify_entanglement(psi, part);
    REQUIRE(before.entangled_wrt == after.entangled_wrt);
    REQUIRE(before.maximally_entangled == after.maximally_entangled);
  }
}

TEST_CASE("trace-norm difference via Gram matrices matches the dense route", "[tensor-core]") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 15; ++iter) {
    const Qumix a = random_qumix(rng, 3), b = random_qumix(rng, 3);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.to_matrix() - b.to_matrix(),
                                                       Eigen::EigenvaluesOnly);
    const double dense_norm = es.eigenvalues().cwiseAbs().sum();
    REQUIRE(std::abs(trace_norm_diff(a, b) - dense_norm) < 1e-9);
  }
}

TEST_CASE("degenerate inputs are rejected", "[tensor-core]") {
  REQUIRE_THROWS_AS(Qumix::ensemble({{1e-15, StateVector::basis(1, 0)},
                                     {1.0, StateVector::basis(1, 1)}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(Partition({}), std::invalid_argument);
  REQUIRE_THROWS_AS(Partition({1, 0}), std::invalid_argument);
  const Partition part({1, 1});
  const int bad[] = {3};
  REQUIRE_THROWS_AS(reduced_state(Qumix::pure(bell()), part, bad), std::invalid_argument);
  const int unsorted[] = {2, 1};
  REQUIRE_THROWS_AS(reduced_state(Qumix::pure(bell()), part, unsorted), std::invalid_argument);
  REQUIRE_THROWS_AS(Qumix::pure(StateVector(1, {cxd{2, 0}, {}})), std::invalid_argument);
}
