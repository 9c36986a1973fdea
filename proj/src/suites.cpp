#include "hqcl/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "hqcl/classical.hpp"
#include "hqcl/entanglement.hpp"
#include "hqcl/gates.hpp"
#include "hqcl/qumix_expr.hpp"
#include "hqcl/random_gen.hpp"

namespace hqcl {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

bool has_repeated_atoms(const Formula& f) {
  int occurrences = 0;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    if (g.kind() == FormulaKind::Atom) ++occurrences;
    for (int i = 0; i < g.arity(); ++i) self(self, g.child(i));
  };
  walk(walk, f);
  return occurrences > static_cast<int>(f.atoms().size());
}

// A validated random model; entangled seeds only work when no atom repeats,
// so such contexts fall back to the compositional generator.
ScopedModel random_valid_model(std::mt19937_64& rng, const Formula& ctx, bool prefer_entangled) {
  const TruthPerspective id = TruthPerspective::identity();
  if (prefer_entangled && !has_repeated_atoms(ctx))
    return random_entangled_model(rng, id, ctx);
  return random_compositional_model(rng, id, ctx);
}

// Runs `trials` random validated models of each context through `check`.
CaseResult run_property(const std::string& id, const std::vector<std::string>& contexts,
                        std::uint64_t trials, std::uint64_t seed,
                        const std::function<bool(const ScopedModel&, std::string&)>& check) {
  Timer timer;
  CaseResult result;
  result.id = id;
  result.passed = true;
  std::vector<Formula> parsed;
  for (const std::string& c : contexts) parsed.push_back(parse_formula(c));
  std::mt19937_64 rng(seed);
  const double tol = semantic_tolerance();
  std::uint64_t models_run = 0;
  for (std::uint64_t trial = 0; trial < trials && result.passed; ++trial) {
    const Formula& ctx = parsed[trial % parsed.size()];
    ScopedModel model = random_valid_model(rng, ctx, trial % 2 == 1);
    if (!model.validate().ok(tol)) {
      result.passed = false;
      result.detail = "generated model failed validation on " + ctx.to_string();
      break;
    }
    ++models_run;
    std::string why;
    if (!check(model, why)) {
      result.passed = false;
      result.detail = "violated on " + ctx.to_string() + " at trial " + std::to_string(trial) +
                      (why.empty() ? "" : ": " + why);
    }
  }
  result.measured.emplace_back("models", static_cast<double>(models_run));
  result.runtime_ms = timer.ms();
  return result;
}

std::function<bool(const ScopedModel&, std::string&)> expect_le(const std::string& lhs,
                                                                const std::string& rhs) {
  const Formula a = parse_formula(lhs), b = parse_formula(rhs);
  return [a, b](const ScopedModel& m, std::string& why) {
    const double pa = m.probability_of(a), pb = m.probability_of(b);
    if (pa <= pb + semantic_tolerance()) return true;
    why = "p(" + a.to_string() + ")=" + std::to_string(pa) + " > p(" + b.to_string() +
          ")=" + std::to_string(pb);
    return false;
  };
}

std::function<bool(const ScopedModel&, std::string&)> expect_equal(const std::string& lhs,
                                                                   const std::string& rhs) {
  const Formula a = parse_formula(lhs), b = parse_formula(rhs);
  return [a, b](const ScopedModel& m, std::string& why) {
    const double pa = m.probability_of(a), pb = m.probability_of(b);
    if (std::abs(pa - pb) <= semantic_tolerance()) return true;
    why = "p(" + a.to_string() + ")=" + std::to_string(pa) + " != p(" + b.to_string() +
          ")=" + std::to_string(pb);
    return false;
  };
}

std::function<bool(const ScopedModel&, std::string&)> all_of_checks(
    std::vector<std::function<bool(const ScopedModel&, std::string&)>> checks) {
  return [checks = std::move(checks)](const ScopedModel& m, std::string& why) {
    for (const auto& c : checks)
      if (!c(m, why)) return false;
    return true;
  };
}

}  // namespace

Report run_suite_valbool(std::uint64_t trials, std::uint64_t seed) {
  Report report;
  report.add(run_property(
      "valbool-1", {"q1 & q2", "(q1 & q2) & q3", "~(q1 & q2)"}, trials, seed,
      all_of_checks({expect_le("q1 & q2", "q1"), expect_le("q1 & q2", "q2")})));
  report.add(run_property(
      "valbool-1-dual", {"q1 | q2", "(q1 | q2) & q3"}, trials, seed + 1,
      all_of_checks({expect_le("q1", "q1 | q2"), expect_le("q2", "q1 | q2")})));
  report.add(run_property("valbool-2", {"(q1 & q2) & q3"}, trials, seed + 2,
                          expect_le("(q1 & q2) & q3", "q1")));
  report.add(run_property("valbool-2-dual", {"(q1 | q2) | q3"}, trials, seed + 3,
                          expect_le("q1", "(q1 | q2) | q3")));
  report.add(run_property(
      "valbool-3", {"~~q1"}, trials, seed + 4, expect_equal("~~q1", "q1")));
  report.add(run_property("valbool-3-compound", {"~~(q1 & q2)"}, trials, seed + 5,
                          expect_equal("~~(q1 & q2)", "q1 & q2")));
  report.add(run_property("valbool-4", {"~(q1 & q2) & ~q1"}, trials, seed + 6,
                          expect_le("~q1", "~(q1 & q2)")));
  report.add(run_property(
      "valbool-5", {"T(q1, t, f)"}, trials, seed + 7,
      all_of_checks({expect_le("f", "q1"), expect_le("q1", "t")})));
  return report;
}

Report run_suite_nval() {
  Report report;
  const TruthPerspective id = TruthPerspective::identity();
  const double tol = semantic_tolerance();
  for (const NvalCase& c : builtin_nval_cases()) {
    Timer timer;
    CaseResult result;
    result.id = c.id;
    result.passed = true;
    try {
      const Formula ctx = parse_formula(c.context);
      const Qumix bottom = eval_qumix_expr(c.bottom_expr, id);
      const ScopedModel model(id, ctx, 1, bottom);
      const ModelDiagnostics diag = model.validate();
      if (!diag.ok(tol)) {
        result.passed = false;
        result.detail = "built-in model failed validation";
      }
      for (const auto& target : c.targets) {
        const double p = model.probability_of(parse_formula(target.formula));
        result.measured.emplace_back(target.formula, p);
        if (std::abs(p - target.expected) > tol) {
          result.passed = false;
          result.detail += " probability of " + target.formula + " off by " +
                           std::to_string(p - target.expected);
        }
      }
      const double pl = model.probability_of(parse_formula(c.lhs));
      const double pr = model.probability_of(parse_formula(c.rhs));
      if (pl <= pr + tol) {
        result.passed = false;
        result.detail += " counterexample gap missing";
      }
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = e.what();
    }
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }
  return report;
}

Report run_suite_genui(std::uint64_t trials, std::uint64_t seed) {
  Report report;
  struct Item {
    const char* id;
    const char* context;
    const char* lhs;
    const char* rhs;
  };
  const Item items[] = {
      {"genui-1", "sid sid q1", "sid sid q1", "q1"},
      {"genui-2", "(sid f & sid t) & q1", "sid f", "sid t"},
      {"genui-3a", "~sid f & q1", "~sid f", "sid f"},
      {"genui-3b", "~sid t & q1", "~sid t", "sid t"},
      {"genui-4", "sid (q1 & q2) & sid f", "sid (q1 & q2)", "sid f"},
      {"genui-5", "snot snot q1 & ~q1", "snot snot q1", "~q1"},
      {"genui-6", "(snot f & snot t) & q1", "snot f", "snot t"},
      {"genui-7a", "~snot f & q1", "~snot f", "snot f"},
      {"genui-7b", "~snot t & q1", "~snot t", "snot t"},
      {"genui-8", "~snot q1 & snot ~q1", "~snot q1", "snot ~q1"},
      {"genui-9", "snot (q1 & q2) & snot f", "snot (q1 & q2)", "snot f"},
      {"genui-10", "sid snot q1 & sid q1", "sid snot q1", "sid q1"},
      {"genui-11", "snot sid q1 & ~snot q1", "snot sid q1", "~snot q1"},
      {"genui-12", "sid snot (q1 & q2) & snot f", "sid snot (q1 & q2)", "snot f"},
      {"genui-13", "snot sid (q1 & q2) & snot f", "snot sid (q1 & q2)", "snot f"},
  };
  std::uint64_t salt = 0;
  for (const Item& item : items)
    report.add(run_property(item.id, {item.context}, trials, seed + salt++,
                            expect_equal(item.lhs, item.rhs)));

  // Gate-level identities behind items 1 and 5.
  {
    Timer timer;
    CaseResult result;
    result.id = "genui-gate-identities";
    result.passed = true;
    const TruthPerspective id = TruthPerspective::identity();
    for (int n = 1; n <= 4 && result.passed; ++n) {
      const auto dim = static_cast<Eigen::Index>(dim_of(n));
      const Eigen::MatrixXcd sqi = gate_dense(GateSpec::sqrt_id(n), id, n, 0);
      const Eigen::MatrixXcd sqn = gate_dense(GateSpec::sqrt_not(n), id, n, 0);
      const Eigen::MatrixXcd nt = gate_dense(GateSpec::not_gate(n), id, n, 0);
      if (max_abs_diff(sqi * sqi, Eigen::MatrixXcd::Identity(dim, dim)) > kExactTolerance ||
          max_abs_diff(sqn * sqn, nt) > kExactTolerance) {
        result.passed = false;
        result.detail = "square identities broken at n=" + std::to_string(n);
      }
    }
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }
  return report;
}

Report run_suite_gates(std::uint64_t trials, std::uint64_t seed) {
  Report report;
  const TruthPerspective id = TruthPerspective::identity();
  const double tol = semantic_tolerance();

  {
    Timer timer;
    CaseResult result;
    result.id = "gates-toffoli-decomposition";
    result.passed = true;
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n)
        if (!toffoli_decomposition_matches(m, n)) {
          result.passed = false;
          result.detail = "failed at m=" + std::to_string(m) + " n=" + std::to_string(n);
        }
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }

  {
    // Conjunction probability law and its reduced-state bounds.
    Timer timer;
    CaseResult result;
    result.id = "gates-and-probability";
    result.passed = true;
    std::mt19937_64 rng(seed);
    std::vector<TruthPerspective> perspectives = {id};
    for (int i = 0; i < 5; ++i) perspectives.push_back(TruthPerspective::random(rng));
    const std::pair<int, int> shapes[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3},
                                          {3, 1}, {2, 3}, {3, 2}, {3, 3}, {1, 4},
                                          {4, 1}, {2, 4}, {4, 2}, {1, 5}, {5, 1}};
    double max_residual = 0.0;
    for (std::uint64_t i = 0; i < trials && result.passed; ++i) {
      const auto [m, n] = shapes[i % std::size(shapes)];
      const TruthPerspective& t = perspectives[i % perspectives.size()];
      const Qumix rho = random_qumix(rng, m + n);
      const Qumix conj = and_gate(t, m, n, rho);
      const double lhs = probability(t, conj);
      const double rhs =
          expect(kron(t.truth_projector_dense(m), t.truth_projector_dense(n)), rho).real();
      max_residual = std::max(max_residual, std::abs(lhs - rhs));
      if (std::abs(lhs - rhs) > tol) {
        result.passed = false;
        result.detail = "probability law violated at m=" + std::to_string(m) +
                        " n=" + std::to_string(n);
      }
      const Partition part({m, n});
      const int first[] = {1}, second[] = {2};
      if (lhs > probability(t, reduced_state(rho, part, first)) + tol ||
          lhs > probability(t, reduced_state(rho, part, second)) + tol) {
        result.passed = false;
        result.detail = "reduced-state bound violated";
      }
    }
    result.measured.emplace_back("max_residual", max_residual);
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }

  {
    Timer timer;
    CaseResult result;
    result.id = "gates-projector-order";
    result.passed = true;
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        const Eigen::MatrixXcd p1m = id.truth_projector_dense(m);
        const Eigen::MatrixXcd p1n = id.truth_projector_dense(n);
        const auto dm = static_cast<Eigen::Index>(dim_of(m));
        const auto dn = static_cast<Eigen::Index>(dim_of(n));
        const Eigen::MatrixXcd p11 = kron(p1m, p1n);
        const Eigen::MatrixXcd left = kron(p1m, Eigen::MatrixXcd::Identity(dn, dn));
        const Eigen::MatrixXcd right = kron(Eigen::MatrixXcd::Identity(dm, dm), p1n);
        if (max_abs_diff(p11 * left, p11) > kExactTolerance ||
            max_abs_diff(p11 * right, p11) > kExactTolerance) {
          result.passed = false;
          result.detail = "projector order broken";
        }
      }
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }

  {
    // The reduced state is the unique operation matching expectations of
    // block observables: tr((A (x) I) rho) == tr(A Red(rho)).
    Timer timer;
    CaseResult result;
    result.id = "gates-reduction-oracle";
    result.passed = true;
    std::mt19937_64 rng(seed + 17);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double max_residual = 0.0;
    for (std::uint64_t i = 0; i < trials && result.passed; ++i) {
      const int m = 1 + static_cast<int>(i % 3);
      const int p = 1 + static_cast<int>((i / 3) % 3);
      const auto dm = static_cast<Eigen::Index>(dim_of(m));
      const auto dp = static_cast<Eigen::Index>(dim_of(p));
      Eigen::MatrixXcd a(dm, dm);
      for (Eigen::Index r = 0; r < dm; ++r)
        for (Eigen::Index c = 0; c < dm; ++c) a(r, c) = cxd{gauss(rng), gauss(rng)};
      a = (a + a.adjoint()).eval();
      const Qumix rho = (i % 2 == 0) ? random_qumix(rng, m + p)
                                     : Qumix::dense_trusted(random_qumix(rng, m + p).to_matrix());
      const Partition part({m, p});
      const int first[] = {1}, second[] = {2};
      const double lhs1 =
          expect(kron(a, Eigen::MatrixXcd::Identity(dp, dp)), rho).real();
      const double rhs1 = expect(a, reduced_state(rho, part, first)).real();
      Eigen::MatrixXcd b(dp, dp);
      for (Eigen::Index r = 0; r < dp; ++r)
        for (Eigen::Index c = 0; c < dp; ++c) b(r, c) = cxd{gauss(rng), gauss(rng)};
      b = (b + b.adjoint()).eval();
      const double lhs2 =
          expect(kron(Eigen::MatrixXcd::Identity(dm, dm), b), rho).real();
      const double rhs2 = expect(b, reduced_state(rho, part, second)).real();
      max_residual = std::max({max_residual, std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)});
      if (std::abs(lhs1 - rhs1) > tol || std::abs(lhs2 - rhs2) > tol) {
        result.passed = false;
        result.detail = "reduction mismatch at m=" + std::to_string(m) + " p=" + std::to_string(p);
      }
    }
    result.measured.emplace_back("max_residual", max_residual);
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }

  {
    // The worked Bell example: the conjunction of an entangled whole differs
    // from the conjunction of its separated parts.
    Timer timer;
    CaseResult result;
    result.id = "gates-holism-witness";
    const double inv = 1.0 / std::sqrt(2.0);
    const StateVector bell(2, {cxd{inv, 0}, {}, {}, cxd{inv, 0}});
    const StateVector ghz(3, {cxd{inv, 0}, {}, {}, {}, {}, {}, {}, cxd{inv, 0}});
    const Qumix whole = and_gate(id, 1, 1, Qumix::pure(bell));
    const Partition part({1, 1});
    const int first[] = {1}, second[] = {2};
    const Qumix parts = and_gate(
        id, 1, 1,
        tensor(reduced_state(Qumix::pure(bell), part, first),
               reduced_state(Qumix::pure(bell), part, second)));
    const double p_whole = probability(id, whole);
    const double p_parts = probability(id, parts);
    const double ghz_dist = trace_norm_diff(whole, Qumix::pure(ghz));
    result.measured.emplace_back("p_whole", p_whole);
    result.measured.emplace_back("p_parts", p_parts);
    result.measured.emplace_back("ghz_trace_dist", ghz_dist);
    result.passed = std::abs(p_whole - 0.5) <= tol && std::abs(p_parts - 0.25) <= tol &&
                    ghz_dist <= tol;
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }

  {
    // Prob_T(T^(n) rho T^(n)^dag) == Prob_I(rho).
    Timer timer;
    CaseResult result;
    result.id = "gates-transport-identity";
    result.passed = true;
    std::mt19937_64 rng(seed + 23);
    double max_residual = 0.0;
    for (std::uint64_t i = 0; i < trials && result.passed; ++i) {
      const int n = 1 + static_cast<int>(i % 4);
      const TruthPerspective t = TruthPerspective::random(rng);
      const Qumix rho = random_qumix(rng, n);
      const double residual = std::abs(probability(t, transport(t, rho)) - probability(id, rho));
      max_residual = std::max(max_residual, residual);
      if (residual > tol) {
        result.passed = false;
        result.detail = "transport identity violated at n=" + std::to_string(n);
      }
    }
    result.measured.emplace_back("max_residual", max_residual);
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }

  {
    // Structured appliers preserve norms exactly.
    Timer timer;
    CaseResult result;
    result.id = "gates-unitarity";
    result.passed = true;
    std::mt19937_64 rng(seed + 29);
    const GateSpec specs[] = {GateSpec::not_gate(2), GateSpec::toffoli(1, 1, 1),
                              GateSpec::toffoli(2, 1, 1), GateSpec::xor_gate(1, 1),
                              GateSpec::sqrt_id(2), GateSpec::sqrt_not(3)};
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(trials, 200); ++i) {
      const GateSpec& g = specs[i % std::size(specs)];
      const TruthPerspective t =
          (i % 3 == 0) ? id : TruthPerspective::random(rng);
      StateVector psi = random_pure(rng, g.width());
      apply_twin_gate_block(g, t, psi.amplitudes(), g.width(), 0, i % 2 == 1);
      if (std::abs(psi.norm() - 1.0) > kExactTolerance) {
        result.passed = false;
        result.detail = g.name() + " does not preserve norms";
      }
    }
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }

  return report;
}

Report run_suite_entangle(std::uint64_t seed) {
  Report report;
  const double tol = semantic_tolerance();
  const double inv = 1.0 / std::sqrt(2.0);
  const Partition part({1, 1, 1});

  const StateVector ghz(3, {cxd{inv, 0}, {}, {}, {}, {}, {}, {}, cxd{inv, 0}});
  const StateVector partial(3, {cxd{inv, 0}, {}, {}, {}, {}, {}, cxd{inv, 0}, {}});
  const StateVector product = StateVector::basis(3, 0);

  {
    Timer timer;
    CaseResult result;
    result.id = "entangle-ghz";
    const EntanglementReport r = classify_entanglement(ghz, part);
    result.passed = r.t_partite_entangled && r.maximally_entangled &&
                    r.entangled_wrt == std::vector<int>{1, 2, 3};
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }
  {
    Timer timer;
    CaseResult result;
    result.id = "entangle-partial";
    const EntanglementReport r = classify_entanglement(partial, part);
    result.passed = !r.t_partite_entangled && !r.maximally_entangled &&
                    r.entangled_wrt == std::vector<int>{1, 2};
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }
  {
    Timer timer;
    CaseResult result;
    result.id = "entangle-product";
    const EntanglementReport r = classify_entanglement(product, part);
    result.passed = r.entangled_wrt.empty() && !r.t_partite_entangled;
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }
  {
    // Flags are invariant under changes of truth-perspective.
    Timer timer;
    CaseResult result;
    result.id = "entangle-invariance";
    result.passed = true;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 20 && result.passed; ++i) {
      const TruthPerspective t = TruthPerspective::random(rng);
      for (const StateVector* psi : {&ghz, &partial, &product}) {
        StateVector rotated = *psi;
        t.apply_extended(rotated, false);
        const EntanglementReport a = classify_entanglement(*psi, part);
        const EntanglementReport b = classify_entanglement(rotated, part);
        if (a.entangled_wrt != b.entangled_wrt ||
            a.t_partite_entangled != b.t_partite_entangled ||
            a.maximally_entangled != b.maximally_entangled) {
          result.passed = false;
          result.detail = "flags changed under a perspective rotation";
        }
      }
    }
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }
  {
    Timer timer;
    CaseResult result;
    result.id = "entangle-bell-reductions";
    const StateVector bell(2, {cxd{inv, 0}, {}, {}, cxd{inv, 0}});
    const Partition two({1, 1});
    const int first[] = {1}, second[] = {2};
    const Eigen::MatrixXcd half = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
    result.passed =
        max_abs_diff(reduced_state(Qumix::pure(bell), two, first).to_matrix(), half) <= tol &&
        max_abs_diff(reduced_state(Qumix::pure(bell), two, second).to_matrix(), half) <= tol;
    result.runtime_ms = timer.ms();
    report.add(std::move(result));
  }
  return report;
}

Report run_suite_all(std::uint64_t trials, std::uint64_t seed) {
  Report report;
  report.merge(run_suite_valbool(trials, seed));
  report.merge(run_suite_nval());
  report.merge(run_suite_genui(trials, seed + 1000));
  report.merge(run_suite_gates(std::max<std::uint64_t>(trials, 500), seed + 2000));
  report.merge(run_suite_entangle(seed + 3000));
  return report;
}

}  // namespace hqcl
