// Acceptance checks: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here and in the library (HQCL_TOL unset).

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>

#include "hqcl/classical.hpp"
#include "hqcl/counterexample.hpp"
#include "hqcl/entanglement.hpp"
#include "hqcl/qumix_expr.hpp"
#include "hqcl/random_gen.hpp"
#include "hqcl/suites.hpp"

using namespace hqcl;

namespace {

const double kTol = 1e-9;
const TruthPerspective kId = TruthPerspective::identity();
int failures = 0;

void line(int criterion, bool passed, const std::string& what) {
  std::cout << (passed ? "PASS" : "FAIL") << "  criterion-" << criterion << "  " << what << "\n";
  if (!passed) ++failures;
}

bool report_passed(const Report& report, const std::string& id) {
  for (const CaseResult& c : report.cases)
    if (c.id == id) return c.passed;
  return false;
}

double case_runtime(const Report& report, const std::string& id) {
  for (const CaseResult& c : report.cases)
    if (c.id == id) return c.runtime_ms;
  return -1.0;
}

// ---- criterion 8: the classical fragment, exhaustively -------------------

std::vector<std::vector<Formula>> boolean_pools(const std::vector<Formula>& leaves,
                                                int max_conn) {
  std::vector<std::vector<Formula>> pool(static_cast<std::size_t>(max_conn) + 1);
  pool[0] = leaves;
  for (int c = 1; c <= max_conn; ++c) {
    for (const Formula& x : pool[static_cast<std::size_t>(c - 1)])
      pool[static_cast<std::size_t>(c)].push_back(Formula::not_of(x));
    for (int left = 0; left <= c - 1; ++left)
      for (const Formula& x : pool[static_cast<std::size_t>(left)])
        for (const Formula& y : pool[static_cast<std::size_t>(c - 1 - left)]) {
          pool[static_cast<std::size_t>(c)].push_back(Formula::and_of(x, y));
          pool[static_cast<std::size_t>(c)].push_back(Formula::or_of(x, y));
          pool[static_cast<std::size_t>(c)].push_back(Formula::xor_of(x, y));
        }
  }
  return pool;
}

bool check_pair(const Formula& alpha, const Formula& beta, std::uint64_t& pairs) {
  ++pairs;
  const bool oracle_says = truth_table_entails(alpha, beta);
  const Verdict verdict = check_classical_consequence(alpha, beta);
  const bool model_says = verdict.status == Verdict::Status::HoldsExhaustively;
  if (model_says != oracle_says) {
    std::cout << "  mismatch: " << alpha.to_string() << " vs " << beta.to_string() << "\n";
    return false;
  }
  return true;
}

void criterion_classical() {
  std::vector<Formula> leaves4;
  for (int i = 1; i <= 4; ++i) leaves4.push_back(Formula::atom(i));
  leaves4.push_back(Formula::t());
  leaves4.push_back(Formula::f());
  const auto pool4 = boolean_pools(leaves4, 1);

  bool ok = true;
  std::uint64_t pairs = 0;
  // (a) every ordered pair with a combined connective count of at most 2
  //     over atoms q1..q4 plus the constants: one-connective formulas pair
  //     with each other, two-connective ones with leaves.
  for (int ca = 0; ca <= 1 && ok; ++ca)
    for (int cb = 0; cb <= 1 && ok; ++cb)
      for (const Formula& alpha : pool4[static_cast<std::size_t>(ca)]) {
        for (const Formula& beta : pool4[static_cast<std::size_t>(cb)])
          if (!check_pair(alpha, beta, pairs)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
  const auto pool4full = boolean_pools(leaves4, 2);
  for (const Formula& alpha : pool4full[2]) {
    for (const Formula& beta : pool4full[0])
      if (!check_pair(alpha, beta, pairs) || !check_pair(beta, alpha, pairs)) {
        ok = false;
        break;
      }
    if (!ok) break;
  }
  // (b) three-connective formulas over q1,q2 against constant-or-atom
  //     partners, both orders.
  std::vector<Formula> leaves2 = {Formula::atom(1), Formula::atom(2)};
  const auto pool2 = boolean_pools(leaves2, 3);
  std::vector<Formula> partners = {Formula::atom(1), Formula::atom(2), Formula::t(), Formula::f()};
  for (const Formula& alpha : pool2[3]) {
    for (const Formula& beta : partners)
      if (!check_pair(alpha, beta, pairs) || !check_pair(beta, alpha, pairs)) {
        ok = false;
        break;
      }
    if (!ok) break;
  }
  line(8, ok, "classical fragment agrees with the truth-table oracle on " +
                  std::to_string(pairs) + " formula pairs");
}

// ---- criterion 9: truth-perspective invariance ----------------------------

void criterion_invariance() {
  std::mt19937_64 rng(424242);
  bool ok = true;
  const Formula contexts[] = {parse_formula("(q1 & q2) & q3"), parse_formula("q1 (+) q2"),
                              parse_formula("~(q1 | q2)")};
  for (int i = 0; i < 100 && ok; ++i) {
    const Formula& ctx = contexts[i % 3];
    ScopedModel canonical = (i % 2 == 0) ? random_compositional_model(rng, kId, ctx)
                                         : random_entangled_model(rng, kId, ctx);
    const TruthPerspective t = TruthPerspective::random(rng);
    ScopedModel moved = transport_model(canonical, t);
    if (!moved.validate().ok(kTol)) ok = false;
    for (int l = 1; l <= canonical.tree().height() && ok; ++l)
      for (const auto& occ : canonical.tree().level(l))
        if (std::abs(moved.probability_of(occ) - canonical.probability_of(occ)) > kTol) ok = false;
  }
  for (int i = 0; i < 200 && ok; ++i) {
    const int n = 1 + (i % 4);
    const TruthPerspective t = TruthPerspective::random(rng);
    const Qumix rho = random_qumix(rng, n);
    if (std::abs(probability(t, transport(t, rho)) - probability(kId, rho)) > kTol) ok = false;
  }
  line(9, ok, "100 transported models and 200 transported qumixes reproduce canonical "
              "probabilities");
}

// ---- criterion 11: model extension ----------------------------------------

void criterion_extension() {
  std::mt19937_64 rng(777);
  bool ok = true;
  int done = 0;
  while (done < 100 && ok) {
    const Formula gamma = random_boolean_formula(rng, {1, 2}, 2);
    const Formula beta = random_boolean_formula(rng, {3, 4}, 1);
    if (gamma.atomic_complexity() + beta.atomic_complexity() > 8) continue;

    bool repeated = false;
    {
      int occurrences = 0;
      auto walk = [&](auto&& self, const Formula& g) -> void {
        if (g.kind() == FormulaKind::Atom) ++occurrences;
        for (int i = 0; i < g.arity(); ++i) self(self, g.child(i));
      };
      walk(walk, gamma);
      repeated = occurrences > static_cast<int>(gamma.atoms().size());
    }
    ScopedModel base = (!repeated && done % 2 == 0) ? random_entangled_model(rng, kId, gamma)
                                                    : random_compositional_model(rng, kId, gamma);
    std::map<int, Qumix> meanings;
    for (int id : beta.atoms()) meanings.emplace(id, random_qumix(rng, 1, 2));
    ScopedModel extended = extend_model(base, beta, meanings);
    if (!extended.validate().ok(kTol)) ok = false;
    for (int l = 1; l <= base.tree().height() && ok; ++l)
      for (const auto& occ : base.tree().level(l)) {
        const double d =
            trace_norm_diff(base.contextual_meaning(occ.formula),
                            extended.contextual_meaning(occ.formula));
        if (d > kTol) {
          std::cout << "  drift " << d << " on " << occ.formula.to_string() << " in "
                    << gamma.to_string() << " extended by " << beta.to_string() << "\n";
          ok = false;
        }
      }
    ++done;
  }
  line(11, ok, "contextual meanings preserved across " + std::to_string(done) +
                   " random atom-disjoint extensions");
}

}  // namespace

int main() {
  std::cout << std::setprecision(12);
  const auto started = std::chrono::steady_clock::now();

  {
    // The conjunction of an entangled whole vs the conjunction of its parts.
    const double inv = 1.0 / std::sqrt(2.0);
    const StateVector bell(2, {cxd{inv, 0}, {}, {}, cxd{inv, 0}});
    const StateVector ghz(3, {cxd{inv, 0}, {}, {}, {}, {}, {}, {}, cxd{inv, 0}});
    const Qumix whole = and_gate(kId, 1, 1, Qumix::pure(bell));
    const Partition part({1, 1});
    const int first[] = {1}, second[] = {2};
    const Qumix parts =
        and_gate(kId, 1, 1,
                 tensor(reduced_state(Qumix::pure(bell), part, first),
                        reduced_state(Qumix::pure(bell), part, second)));
    const bool ok = std::abs(probability(kId, whole) - 0.5) <= kTol &&
                    std::abs(probability(kId, parts) - 0.25) <= kTol &&
                    trace_norm_diff(whole, Qumix::pure(ghz)) <= kTol;
    line(1, ok, "entangled-pair conjunction: 0.5 vs 0.25, output matches the GHZ projector");
  }

  {
    const Report nval = run_suite_nval();
    const double t56 = case_runtime(nval, "nval-5") + case_runtime(nval, "nval-6");
    line(2, nval.all_passed() && t56 < 10000.0,
         "ten golden counterexample models reproduce their probabilities (13-qubit pair in " +
             std::to_string(t56) + " ms)");
  }

  const Report gates = run_suite_gates(500, 20240915);
  line(3, report_passed(gates, "gates-and-probability"),
       "conjunction probability law and reduction bounds over 500 random qumixes");
  line(4, report_passed(gates, "gates-reduction-oracle"),
       "block-observable characterization of reduced states over 500 random pairs");
  line(5, report_passed(gates, "gates-toffoli-decomposition"),
       "projector decomposition of the Toffoli gate for m,n in {1,2,3}");

  {
    const Report valbool = run_suite_valbool(300, 20240915);
    bool ok = valbool.all_passed();
    line(6, ok, "valid Boolean arguments never falsified over 300 models per item");
    if (!ok) valbool.print_text(std::cout);
  }

  {
    const Report genui = run_suite_genui(300, 20240915);
    bool ok = genui.all_passed();
    line(7, ok, "genuine-connective equivalences hold over 300 models per item");
    if (!ok) genui.print_text(std::cout);
  }

  criterion_classical();
  criterion_invariance();

  {
    const Report entangle = run_suite_entangle(20240915);
    line(10, entangle.all_passed(),
         "entanglement flags for the worked states, invariant under 20 perspective changes");
  }

  criterion_extension();

  const double total_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
            << std::setprecision(3) << total_s << " s)\n";
  return failures == 0 ? 0 : 1;
}
