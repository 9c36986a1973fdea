#include <catch2/catch_amalgamated.hpp>

#include "dense_oracle.hpp"
#include "hqcl/random_gen.hpp"
#include "hqcl/syntax_tree.hpp"

using namespace hqcl;

TEST_CASE("parsing expands the defined connectives", "[formula-lang]") {
  const Formula f = parse_formula("q1 & ~q1");
  REQUIRE(f == Formula::toffoli_of(Formula::atom(1), Formula::not_of(Formula::atom(1)),
                                   Formula::f()));

  REQUIRE(parse_formula("t") == Formula::t());

  const Formula g = parse_formula("q1 | q2");
  REQUIRE(g == Formula::not_of(Formula::toffoli_of(Formula::not_of(Formula::atom(1)),
                                                   Formula::not_of(Formula::atom(2)),
                                                   Formula::f())));
}

TEST_CASE("precedence and associativity", "[formula-lang]") {
  REQUIRE(parse_formula("q1 & q2 & q3") ==
          Formula::and_of(Formula::and_of(Formula::atom(1), Formula::atom(2)), Formula::atom(3)));
  REQUIRE(parse_formula("q1 | q2 & q3") ==
          Formula::or_of(Formula::atom(1), Formula::and_of(Formula::atom(2), Formula::atom(3))));
  REQUIRE(parse_formula("q1 (+) q2 | q3") ==
          Formula::xor_of(Formula::atom(1), Formula::or_of(Formula::atom(2), Formula::atom(3))));
  REQUIRE(parse_formula("~q1 & q2") ==
          Formula::and_of(Formula::not_of(Formula::atom(1)), Formula::atom(2)));
  REQUIRE(parse_formula("sid snot q1") ==
          Formula::sqrt_id_of(Formula::sqrt_not_of(Formula::atom(1))));
}

TEST_CASE("atomic complexity", "[formula-lang]") {
  REQUIRE(parse_formula("T(q1, q1, f)").atomic_complexity() == 3);
  REQUIRE(parse_formula("q1").atomic_complexity() == 1);
  // Expansion inserts two f leaves.
  REQUIRE(parse_formula("(q1 & q2) & q3").atomic_complexity() == 5);
}

TEST_CASE("syntactical tree of the non-contradiction instance", "[formula-lang]") {
  const SyntacticalTree tree(parse_formula("~T(q1, ~q1, f)"));
  REQUIRE(tree.height() == 4);
  REQUIRE(tree.level(1).size() == 1);
  REQUIRE(tree.level(2).size() == 1);
  REQUIRE(tree.level(2)[0].formula == parse_formula("T(q1, ~q1, f)"));
  REQUIRE(tree.level(3).size() == 3);
  REQUIRE(tree.level(3)[1].formula == parse_formula("~q1"));
  REQUIRE(tree.level(4).size() == 3);
  REQUIRE(tree.level(4)[0].formula == Formula::atom(1));
  REQUIRE(tree.level(4)[1].formula == Formula::atom(1));
  REQUIRE(tree.level(4)[2].formula == Formula::f());

  REQUIRE(SyntacticalTree(Formula::atom(1)).height() == 1);
  REQUIRE(SyntacticalTree(parse_formula("q1 (+) q2")).height() == 2);
}

TEST_CASE("gate tree of the worked example", "[formula-lang]") {
  const SyntacticalTree tree(parse_formula("~T(q1, ~q1, f)"));
  const GateTree gates = compile_gate_tree(tree);
  REQUIRE(gates.count() == 3);
  // Top transition first, in the paper's orientation.
  REQUIRE(gates.gate(3).to_string() == "I(1) (x) NOT(1) (x) I(1)");
  REQUIRE(gates.gate(2).to_string() == "T(1,1,1)");
  REQUIRE(gates.gate(1).to_string() == "NOT(3)");

  REQUIRE(compile_gate_tree(SyntacticalTree(Formula::atom(1))).count() == 0);
}

TEST_CASE("occurrences are tracked by position", "[formula-lang]") {
  const SyntacticalTree tree(parse_formula("T(q1, q1, f)"));
  const auto qs = tree.occurrences_of(Formula::atom(1));
  REQUIRE(qs.size() == 2);
  REQUIRE(qs[0].level == 2);
  REQUIRE(qs[0].position == 1);
  REQUIRE(qs[1].position == 2);

  const auto roots = tree.occurrences_of(tree.root());
  REQUIRE(roots.size() == 1);
  REQUIRE(roots[0].level == 1);
  REQUIRE(roots[0].offset == 0);
  REQUIRE(roots[0].width() == 3);

  // The ancilla of the worked tree sits at position 3, offset 2, levels 3-4.
  const SyntacticalTree worked(parse_formula("~T(q1, ~q1, f)"));
  const auto fs = worked.occurrences_of(Formula::f());
  REQUIRE(fs.size() == 2);
  REQUIRE(fs[0].level == 3);
  REQUIRE(fs[1].level == 4);
  for (const auto& occ : fs) {
    REQUIRE(occ.position == 3);
    REQUIRE(occ.offset == 2);
  }
}

TEST_CASE("per-level width conservation", "[formula-lang]") {
  std::mt19937_64 rng(3);
  const std::vector<int> pool = {1, 2, 3, 4, 5, 6};
  for (int iter = 0; iter < 40; ++iter) {
    const Formula f = random_boolean_formula(rng, pool, 5);
    const SyntacticalTree tree(f);
    for (int l = 1; l <= tree.height(); ++l) {
      int width = 0;
      for (const auto& occ : tree.level(l)) width += occ.width();
      REQUIRE(width == f.atomic_complexity());
    }
    const GateTree gates = compile_gate_tree(tree);
    for (int i = 1; i <= gates.count(); ++i) {
      int width = 0;
      for (const auto& b : gates.gate(i).blocks) width += b.width;
      REQUIRE(width == f.atomic_complexity());
    }
  }
}

TEST_CASE("printing round trip", "[formula-lang]") {
  std::mt19937_64 rng(5);
  const std::vector<int> pool = {1, 2, 3};
  for (int iter = 0; iter < 200; ++iter) {
    const Formula f = random_boolean_formula(rng, pool, 4);
    REQUIRE(parse_formula(f.to_string()) == f);
  }
  // Quantum connectives too.
  REQUIRE(parse_formula(parse_formula("sid (q1 & snot q2)").to_string()) ==
          parse_formula("sid (q1 & snot q2)"));
  REQUIRE(parse_formula(parse_formula("~(q1 | q2) (+) T(q1, t, ~q2)").to_string()) ==
          parse_formula("~(q1 | q2) (+) T(q1, t, ~q2)"));
}

TEST_CASE("twin-gate coherence of compiled trees", "[formula-lang]") {
  // Compiling at T equals conjugating the canonical compile by T^(At).
  std::mt19937_64 rng(7);
  const Formula f = parse_formula("~(q1 & q2) (+) q3");
  const SyntacticalTree tree(f);
  const GateTree gates = compile_gate_tree(tree);
  const int n = f.atomic_complexity();
  for (int iter = 0; iter < 5; ++iter) {
    const TruthPerspective t = TruthPerspective::random(rng);
    for (int i = 1; i <= gates.count(); ++i) {
      const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
      Eigen::MatrixXcd at_t = Eigen::MatrixXcd::Identity(dim, dim);
      Eigen::MatrixXcd canonical = Eigen::MatrixXcd::Identity(dim, dim);
      for (Eigen::Index j = 0; j < dim; ++j) {
        apply_level_gate(gates.gate(i), t,
                         std::span<cxd>(at_t.col(j).data(), static_cast<std::size_t>(dim)), n,
                         false);
        apply_level_gate(gates.gate(i), TruthPerspective::identity(),
                         std::span<cxd>(canonical.col(j).data(), static_cast<std::size_t>(dim)),
                         n, false);
      }
      REQUIRE(oracle::twin_dense(canonical, t.matrix()).isApprox(at_t, 1e-9));
    }
  }
}

TEST_CASE("parse errors carry positions", "[formula-lang]") {
  REQUIRE_THROWS_AS(parse_formula("q1 &"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("q0"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("q"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("foo"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("T(q1, q2)"), ParseError);
  REQUIRE_THROWS_AS(parse_formula("(q1 & q2"), ParseError);
  try {
    parse_formula("q1 & %");
  } catch (const ParseError& e) {
    REQUIRE(e.pos == 5);
  }
}
