#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hqcl/classical.hpp"
#include "hqcl/counterexample.hpp"
#include "hqcl/entanglement.hpp"
#include "hqcl/qumix_expr.hpp"
#include "hqcl/suites.hpp"

namespace {

using hqcl::Formula;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

json read_json_input(const std::string& path) {
  if (path == "-") {
    json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void print_parse_error(const std::string& text, const hqcl::ParseError& e) {
  std::cerr << "error: " << e.what() << " at position " << e.pos << "\n";
  std::cerr << "  " << text << "\n  " << std::string(e.pos, ' ') << "^\n";
}

int cmd_parse(const std::string& text, bool show_tree, bool show_gates) {
  std::optional<Formula> parsed;
  try {
    parsed = hqcl::parse_formula(text);
  } catch (const hqcl::ParseError& e) {
    print_parse_error(text, e);
    return kExitUsage;
  }
  const Formula& f = *parsed;
  std::cout << "formula: " << f.to_string() << "\n";
  std::cout << "atomic complexity: " << f.atomic_complexity() << "\n";
  hqcl::SyntacticalTree tree(f);
  std::cout << "height: " << tree.height() << "\n";
  if (show_tree) {
    for (int l = tree.height(); l >= 1; --l) {
      std::cout << "Level " << l << ": ";
      const auto& level = tree.level(l);
      for (std::size_t i = 0; i < level.size(); ++i) {
        if (i) std::cout << "  ";
        std::cout << level[i].formula.to_string();
      }
      std::cout << "\n";
    }
  }
  if (show_gates) {
    hqcl::GateTree gates = hqcl::compile_gate_tree(tree);
    std::cout << "gate tree: (";
    for (int i = gates.count(); i >= 1; --i) {
      std::cout << gates.gate(i).to_string();
      if (i > 1) std::cout << ", ";
    }
    std::cout << ")\n";
  }
  return kExitOk;
}

json gtv_to_json(const Eigen::Matrix2cd& m) {
  json out = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    out.push_back(row);
  }
  return out;
}

int cmd_eval(const std::string& path, const std::string& format) {
  const json spec = read_json_input(path);
  hqcl::ScopedModel model = hqcl::model_from_spec(spec);
  const hqcl::ModelDiagnostics diag = model.validate();
  if (!diag.ok(hqcl::semantic_tolerance())) {
    std::cerr << "model validation failed:\n";
    for (const std::string& line : diag.describe()) std::cerr << "  " << line << "\n";
    return kExitValidation;
  }

  json occurrences = json::array();
  const auto& tree = model.tree();
  for (int l = tree.height(); l >= 1; --l) {
    for (const auto& occ : tree.level(l)) {
      json entry = {{"level", occ.level},
                    {"position", occ.position},
                    {"formula", occ.formula.to_string()},
                    {"probability", model.probability_of(occ)},
                    {"generalized_truth_value", gtv_to_json(model.generalized_truth_value(occ))}};
      occurrences.push_back(std::move(entry));
    }
  }
  json out = {{"formula", model.context().to_string()},
              {"perspective", hqcl::perspective_to_json(model.perspective())},
              {"valid", true},
              {"compositional", diag.compositional ? json(*diag.compositional) : json()},
              {"occurrences", occurrences}};
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "model of " << model.context().to_string() << " (valid)\n";
    for (const auto& entry : occurrences)
      std::cout << "  level " << entry["level"] << " pos " << entry["position"] << "  p="
                << std::setprecision(12) << entry["probability"].get<double>() << "  "
                << entry["formula"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_suite(const std::string& name, std::uint64_t trials, std::uint64_t seed,
              const std::string& format) {
  hqcl::Report report;
  if (name == "valbool")
    report = hqcl::run_suite_valbool(trials, seed);
  else if (name == "nval")
    report = hqcl::run_suite_nval();
  else if (name == "genui")
    report = hqcl::run_suite_genui(trials, seed);
  else if (name == "gates")
    report = hqcl::run_suite_gates(std::max<std::uint64_t>(trials, 500), seed);
  else if (name == "entangle")
    report = hqcl::run_suite_entangle(seed);
  else if (name == "all")
    report = hqcl::run_suite_all(trials, seed);
  else {
    std::cerr << "unknown suite '" << name << "'\n";
    return kExitUsage;
  }
  if (format == "json")
    std::cout << report.to_json().dump(2) << "\n";
  else
    report.print_text(std::cout);
  return report.all_passed() ? kExitOk : kExitSuiteFailure;
}

int cmd_consequence(const std::string& alpha_text, const std::string& beta_text,
                    const std::vector<std::string>& context_texts, std::uint64_t trials,
                    std::uint64_t seed, const std::string& strategy, const std::string& format) {
  std::optional<Formula> alpha, beta;
  std::vector<Formula> contexts;
  try {
    alpha = hqcl::parse_formula(alpha_text);
    beta = hqcl::parse_formula(beta_text);
    for (const std::string& c : context_texts) contexts.push_back(hqcl::parse_formula(c));
  } catch (const hqcl::ParseError& e) {
    std::cerr << "error: " << e.what() << " at position " << e.pos << "\n";
    return kExitUsage;
  }
  hqcl::SearchStrategy strat = hqcl::SearchStrategy::Both;
  if (strategy == "comp")
    strat = hqcl::SearchStrategy::Compositional;
  else if (strategy == "ent")
    strat = hqcl::SearchStrategy::Entangled;
  else if (strategy != "both") {
    std::cerr << "strategy must be comp, ent or both\n";
    return kExitUsage;
  }

  hqcl::Verdict verdict;
  try {
    verdict = hqcl::search_counterexample(*alpha, *beta, contexts, strat, trials, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  json out = {{"alpha", alpha->to_string()},
              {"beta", beta->to_string()},
              {"contexts", verdict.contexts_checked},
              {"strategy", strategy},
              {"trials_requested", trials},
              {"trials_run", verdict.trials_run},
              {"seed", seed},
              {"generator_starved", verdict.generator_starved},
              {"verdict", verdict.falsified() ? "counterexample" : "not-falsified"}};
  if (verdict.counterexample) {
    const auto& ce = *verdict.counterexample;
    out["counterexample"] = {{"context", ce.context},
                             {"prob_alpha", ce.prob_alpha},
                             {"prob_beta", ce.prob_beta},
                             {"trial", ce.trial},
                             {"model", json::parse(ce.model_spec_json)}};
  }
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << out["verdict"].get<std::string>() << " (checked "
              << verdict.trials_run << " models over " << verdict.contexts_checked.size()
              << " context(s))\n";
    if (verdict.counterexample)
      std::cout << "  p(" << alpha->to_string() << ") = " << verdict.counterexample->prob_alpha
                << " > p(" << beta->to_string() << ") = " << verdict.counterexample->prob_beta
                << " in context " << verdict.counterexample->context << "\n";
    if (verdict.generator_starved)
      std::cout << "  note: entangled seed generation starved (normality constraints)\n";
  }
  return kExitOk;
}

int cmd_entangle(const std::string& path, const std::string& partition_text) {
  const json j = read_json_input(path);
  hqcl::StateVector psi = hqcl::state_from_json(j.contains("state") ? j.at("state") : j);
  std::vector<int> blocks;
  std::stringstream ss(partition_text);
  std::string tok;
  while (std::getline(ss, tok, ',')) blocks.push_back(std::stoi(tok));
  const hqcl::Partition part(blocks);
  const hqcl::EntanglementReport r = hqcl::classify_entanglement(psi, part);
  std::cout << "blocks:";
  for (int b : blocks) std::cout << " " << b;
  std::cout << "\nproperly mixed:";
  for (std::size_t i = 0; i < r.properly_mixed.size(); ++i)
    if (r.properly_mixed[i]) std::cout << " " << (i + 1);
  std::cout << "\n" << (r.t_partite_entangled ? "" : "not ") << "t-partite entangled\n"
            << (r.maximally_entangled ? "" : "not ") << "maximally entangled\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hqcl: holistic quantum computational logic toolkit"};
  app.require_subcommand(1);

  std::string formula_text, eval_path, suite_name, report_format = "text";
  std::string alpha_text, beta_text, strategy = "both";
  std::vector<std::string> context_texts;
  std::string state_path, partition_text = "1,1,1";
  std::uint64_t trials = 300, seed = 20240915;
  bool show_tree = false, show_gates = false;

  auto* parse = app.add_subcommand("parse", "parse a formula and print its syntactical tree");
  parse->add_option("formula", formula_text)->required();
  parse->add_flag("--tree", show_tree, "print the level decomposition");
  parse->add_flag("--gate-tree", show_gates, "print the compiled per-level gates");

  auto* eval = app.add_subcommand("eval", "evaluate a model spec (JSON file or - for stdin)");
  eval->add_option("spec", eval_path)->required();
  eval->add_option("--report", report_format)->check(CLI::IsMember({"text", "json"}));

  auto* suite = app.add_subcommand("suite", "run a built-in suite");
  suite->add_option("name", suite_name)
      ->required()
      ->check(CLI::IsMember({"valbool", "nval", "genui", "gates", "entangle", "all"}));
  suite->add_option("--trials", trials);
  suite->add_option("--seed", seed);
  suite->add_option("--report", report_format)->check(CLI::IsMember({"text", "json"}));

  auto* consequence = app.add_subcommand("consequence", "search for a counterexample model");
  consequence->add_option("--alpha", alpha_text)->required();
  consequence->add_option("--beta", beta_text)->required();
  consequence->add_option("--context", context_texts);
  consequence->add_option("--trials", trials);
  consequence->add_option("--seed", seed);
  consequence->add_option("--strategy", strategy)->check(CLI::IsMember({"comp", "ent", "both"}));
  consequence->add_option("--report", report_format)->check(CLI::IsMember({"text", "json"}));

  auto* entangle = app.add_subcommand("entangle", "classify the entanglement of a state vector");
  entangle->add_option("--state", state_path)->required();
  entangle->add_option("--partition", partition_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (parse->parsed()) return cmd_parse(formula_text, show_tree, show_gates);
    if (eval->parsed()) return cmd_eval(eval_path, report_format);
    if (suite->parsed()) return cmd_suite(suite_name, trials, seed, report_format);
    if (consequence->parsed())
      return cmd_consequence(alpha_text, beta_text, context_texts, trials, seed, strategy,
                             report_format);
    if (entangle->parsed()) return cmd_entangle(state_path, partition_text);
  } catch (const hqcl::ParseError& e) {
    std::cerr << "error: " << e.what() << " at position " << e.pos << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
