#include <catch2/catch_amalgamated.hpp>

#include "dense_oracle.hpp"
#include "hqcl/random_gen.hpp"
#include "hqcl/truth_perspective.hpp"

using namespace hqcl;

namespace {
const double kTol = 1e-9;
const double kInv = 1.0 / std::sqrt(2.0);
}  // namespace

TEST_CASE("extension acts qubit-wise", "[truth-perspective]") {
  const TruthPerspective id = TruthPerspective::identity();
  REQUIRE(max_abs_diff(id.extend_dense(3), oracle::eye(3)) < 1e-15);

  const TruthPerspective h = TruthPerspective::hadamard();
  StateVector plus = StateVector::basis(1, 0);
  h.apply_extended(plus, false);
  REQUIRE(std::abs(plus[0] - cxd{kInv, 0}) < 1e-12);
  REQUIRE(std::abs(plus[1] - cxd{kInv, 0}) < 1e-12);

  std::mt19937_64 rng(3);
  const TruthPerspective t = TruthPerspective::random(rng);
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) {
      const int bits[] = {x1, x2};
      const StateVector lhs = t_register(t, bits);
      StateVector a = StateVector::basis(1, static_cast<std::uint64_t>(x1));
      StateVector b = StateVector::basis(1, static_cast<std::uint64_t>(x2));
      t.apply_extended(a, false);
      t.apply_extended(b, false);
      const StateVector rhs = tensor(a, b);
      for (std::uint64_t i = 0; i < lhs.dim(); ++i) REQUIRE(std::abs(lhs[i] - rhs[i]) < 1e-12);
    }
}

TEST_CASE("perspective registers", "[truth-perspective]") {
  const int bits10[] = {1, 0};
  const StateVector canonical = t_register(TruthPerspective::identity(), bits10);
  REQUIRE(std::abs(canonical[2] - cxd{1, 0}) < 1e-15);

  const int bit1[] = {1};
  const StateVector minus = t_register(TruthPerspective::hadamard(), bit1);
  REQUIRE(std::abs(minus[0] - cxd{kInv, 0}) < 1e-12);
  REQUIRE(std::abs(minus[1] - cxd{-kInv, 0}) < 1e-12);

  // The 2^n registers of a random perspective form an orthonormal set.
  std::mt19937_64 rng(5);
  const TruthPerspective t = TruthPerspective::random(rng);
  std::vector<StateVector> regs;
  for (int x = 0; x < 8; ++x) {
    const int bits[] = {(x >> 2) & 1, (x >> 1) & 1, x & 1};
    regs.push_back(t_register(t, bits));
  }
  for (std::size_t i = 0; i < regs.size(); ++i)
    for (std::size_t j = 0; j < regs.size(); ++j)
      REQUIRE(std::abs(regs[i].inner(regs[j]) - (i == j ? cxd{1, 0} : cxd{0, 0})) < 1e-12);
}

TEST_CASE("truth and falsity projectors", "[truth-perspective]") {
  const TruthPerspective id = TruthPerspective::identity();
  Eigen::MatrixXcd d1(2, 2);
  d1 << 0, 0, 0, 1;
  REQUIRE(max_abs_diff(id.truth_projector_dense(1), d1) < 1e-15);

  Eigen::MatrixXcd d2 = Eigen::MatrixXcd::Zero(4, 4);
  d2(1, 1) = d2(3, 3) = 1;  // diag(0,1,0,1), from I (x) diag(0,1)
  REQUIRE(max_abs_diff(id.truth_projector_dense(2), d2) < 1e-15);

  Eigen::MatrixXcd hp(2, 2);  // H|1><1|H^dag computed by hand
  hp << 0.5, -0.5, -0.5, 0.5;
  REQUIRE(max_abs_diff(TruthPerspective::hadamard().truth_projector_dense(1), hp) < 1e-12);

  std::mt19937_64 rng(7);
  const TruthPerspective t = TruthPerspective::random(rng);
  const Eigen::MatrixXcd p1 = t.truth_projector_dense(2);
  const Eigen::MatrixXcd p0 = t.falsity_projector_dense(2);
  REQUIRE(max_abs_diff(p1 * p1, p1) < kTol);
  REQUIRE(max_abs_diff(p1, p1.adjoint()) < kTol);
  REQUIRE(max_abs_diff(p1 * p0, Eigen::MatrixXcd::Zero(4, 4)) < kTol);
  REQUIRE(max_abs_diff(t.truth_projector_dense(1) + t.falsity_projector_dense(1),
                       oracle::eye(1)) < kTol);
}

TEST_CASE("probability", "[truth-perspective]") {
  std::mt19937_64 rng(11);
  const TruthPerspective t = TruthPerspective::random(rng);
  // Prob_T(a0|0_T> + a1|1_T>) = |a1|^2
  const cxd a0{0.6, 0.0}, a1{0.0, 0.8};
  StateVector psi(1, {a0, a1});
  t.apply_extended(psi, false);
  REQUIRE(probability(t, psi) == Catch::Approx(0.64).margin(1e-12));

  REQUIRE(probability(TruthPerspective::identity(), Qumix::maximally_mixed(1)) ==
          Catch::Approx(0.5));

  const StateVector ghz(3, {cxd{kInv, 0}, {}, {}, {}, {}, {}, {}, cxd{kInv, 0}});
  REQUIRE(probability(TruthPerspective::identity(), Qumix::pure(ghz)) == Catch::Approx(0.5));
}

TEST_CASE("probability is affine in mixtures", "[truth-perspective]") {
  std::mt19937_64 rng(13);
  const TruthPerspective t = TruthPerspective::random(rng);
  const StateVector v1 = random_pure(rng, 2), v2 = random_pure(rng, 2);
  const double w = 0.3;
  const Qumix mix = Qumix::ensemble({{w, v1}, {1 - w, v2}});
  REQUIRE(probability(t, mix) ==
          Catch::Approx(w * probability(t, Qumix::pure(v1)) +
                        (1 - w) * probability(t, Qumix::pure(v2)))
              .margin(kTol));
}

TEST_CASE("transport identity", "[truth-perspective]") {
  std::mt19937_64 rng(17);
  const TruthPerspective id = TruthPerspective::identity();
  for (int iter = 0; iter < 25; ++iter) {
    const TruthPerspective t = TruthPerspective::random(rng);
    const Qumix rho = random_qumix(rng, 2);
    REQUIRE(std::abs(probability(t, transport(t, rho)) - probability(id, rho)) < kTol);
  }
}

TEST_CASE("preorder", "[truth-perspective]") {
  const TruthPerspective id = TruthPerspective::identity();
  const Qumix p0 = Qumix::basis_projector(1, 0);
  const Qumix p1 = Qumix::basis_projector(1, 1);
  const Qumix half = Qumix::maximally_mixed(1);
  REQUIRE(preorder_le(id, p0, p1));
  REQUIRE(preorder_le(id, p0, half));
  REQUIRE(preorder_le(id, half, half));
  REQUIRE_FALSE(preorder_le(id, p1, half));

  // Reflexive, transitive, total on a finite set.
  std::mt19937_64 rng(19);
  std::vector<Qumix> set;
  for (int i = 0; i < 6; ++i) set.push_back(random_qumix(rng, 2));
  for (const Qumix& a : set) REQUIRE(preorder_le(id, a, a));
  for (const Qumix& a : set)
    for (const Qumix& b : set) {
      REQUIRE((preorder_le(id, a, b) || preorder_le(id, b, a)));
      for (const Qumix& c : set)
        if (preorder_le(id, a, b) && preorder_le(id, b, c))
          REQUIRE(probability(id, a) <= probability(id, c) + 2e-9);
    }
}

TEST_CASE("non-unitary perspectives are rejected", "[truth-perspective]") {
  Eigen::Matrix2cd bad;
  bad << 1, 1, 0, 1;
  REQUIRE_THROWS_AS(TruthPerspective(bad), std::invalid_argument);
}
