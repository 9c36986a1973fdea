#include <catch2/catch_amalgamated.hpp>

#include "hqcl/classical.hpp"
#include "hqcl/model.hpp"
#include "hqcl/random_gen.hpp"

using namespace hqcl;

TEST_CASE("two-valued evaluation", "[classical]") {
  const std::map<int, int> assign = {{1, 1}, {2, 0}};
  REQUIRE(classical_eval(parse_formula("q1 & q2"), assign) == 0);
  REQUIRE(classical_eval(parse_formula("q1 | q2"), assign) == 1);
  REQUIRE(classical_eval(parse_formula("q1 (+) q2"), assign) == 1);
  REQUIRE(classical_eval(parse_formula("~q1"), assign) == 0);
  REQUIRE(classical_eval(parse_formula("T(q1, q1, t)"), assign) == 0);
  REQUIRE_THROWS_AS(classical_eval(parse_formula("sid q1"), assign), std::invalid_argument);
}

TEST_CASE("register models agree with the truth-table oracle", "[classical]") {
  const Verdict weakening = check_classical_consequence(parse_formula("q1 & q2"),
                                                        parse_formula("q1"));
  REQUIRE(weakening.status == Verdict::Status::HoldsExhaustively);

  // Commutativity and idempotence hold classically, unlike in the full logic.
  REQUIRE(check_classical_consequence(parse_formula("q1 & q2"), parse_formula("q2 & q1")).status ==
          Verdict::Status::HoldsExhaustively);
  REQUIRE(check_classical_consequence(parse_formula("q1"), parse_formula("q1 & q1")).status ==
          Verdict::Status::HoldsExhaustively);

  const Verdict broken = check_classical_consequence(parse_formula("q1 | q2"),
                                                     parse_formula("q1"));
  REQUIRE(broken.status == Verdict::Status::CounterexampleFound);
  REQUIRE(broken.counterexample->prob_alpha == Catch::Approx(1.0));
  REQUIRE(broken.counterexample->prob_beta == Catch::Approx(0.0));

  REQUIRE_THROWS_AS(check_classical_consequence(parse_formula("sid q1"), parse_formula("q1")),
                    std::invalid_argument);
}

TEST_CASE("model path matches the oracle on random pairs", "[classical]") {
  std::mt19937_64 rng(41);
  const std::vector<int> pool = {1, 2, 3};
  for (int iter = 0; iter < 120; ++iter) {
    const Formula alpha = random_boolean_formula(rng, pool, 2);
    const Formula beta = random_boolean_formula(rng, pool, 2);
    const bool oracle_says = truth_table_entails(alpha, beta);
    const Verdict verdict = check_classical_consequence(alpha, beta);
    INFO(alpha.to_string() << " vs " << beta.to_string());
    REQUIRE((verdict.status == Verdict::Status::HoldsExhaustively) == oracle_says);
  }
}

TEST_CASE("compiled gates reproduce classical evaluation on registers", "[classical]") {
  // Gate-tree soundness: descending a register through the compiled tree
  // computes the same bits as direct recursive evaluation.
  std::mt19937_64 rng(43);
  const std::vector<int> pool = {1, 2, 3, 4};
  const TruthPerspective id = TruthPerspective::identity();
  for (int iter = 0; iter < 80; ++iter) {
    const Formula f = random_boolean_formula(rng, pool, 3);
    std::map<int, int> assignment;
    std::map<int, Qumix> meanings;
    for (int atom : f.atoms()) {
      const int bit = static_cast<int>(rng() % 2);
      assignment[atom] = bit;
      meanings.emplace(atom, Qumix::basis_projector(1, static_cast<std::uint64_t>(bit)));
    }
    ScopedModel model = ScopedModel::compositional(id, f, meanings);
    const double p = model.probability_of(f);
    REQUIRE(p == Catch::Approx(static_cast<double>(classical_eval(f, assignment))).margin(1e-9));
  }
}
