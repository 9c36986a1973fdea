#include "hqcl/qumix_expr.hpp"

#include <stdexcept>

#include "hqcl/gates.hpp"

namespace hqcl {

namespace {

GateSpec gate_from_json(const nlohmann::json& j, bool& is_and) {
  const std::string name = j.at("name").get<std::string>();
  const auto& args = j.at("args");
  is_and = false;
  auto arg = [&](std::size_t i) { return args.at(i).get<int>(); };
  if (name == "NOT") return GateSpec::not_gate(arg(0));
  if (name == "SQI") return GateSpec::sqrt_id(arg(0));
  if (name == "SQN") return GateSpec::sqrt_not(arg(0));
  if (name == "XOR") return GateSpec::xor_gate(arg(0), arg(1));
  if (name == "T") return GateSpec::toffoli(arg(0), arg(1), arg(2));
  if (name == "AND") {
    is_and = true;
    return GateSpec::toffoli(arg(0), arg(1), 1);
  }
  throw std::invalid_argument("unknown gate name '" + name + "'");
}

Qumix apply_gate_at(const GateSpec& g, const TruthPerspective& t, const Qumix& rho, int offset) {
  if (offset == 0 && g.width() == rho.qubits()) return apply_gate(g, t, rho);
  if (offset < 0 || offset + g.width() > rho.qubits())
    throw std::invalid_argument("embedded gate does not fit the register");
  if (rho.is_ensemble()) {
    std::vector<WeightedVector> members = rho.members();
    for (auto& m : members)
      apply_twin_gate_block(g, t, m.vec.amplitudes(), rho.qubits(), offset, false);
    return Qumix::ensemble(std::move(members));
  }
  const auto dim = static_cast<Eigen::Index>(dim_of(rho.qubits()));
  Eigen::MatrixXcd c = rho.matrix();
  for (Eigen::Index j = 0; j < dim; ++j)
    apply_twin_gate_block(g, t, std::span<cxd>(c.col(j).data(), static_cast<std::size_t>(dim)),
                          rho.qubits(), offset, false);
  Eigen::MatrixXcd d = c.adjoint();
  for (Eigen::Index j = 0; j < dim; ++j)
    apply_twin_gate_block(g, t, std::span<cxd>(d.col(j).data(), static_cast<std::size_t>(dim)),
                          rho.qubits(), offset, false);
  return Qumix::dense_trusted(d.adjoint());
}

}  // namespace

StateVector state_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("state must be an array of [re,im]");
  std::vector<cxd> amps;
  amps.reserve(j.size());
  for (const auto& entry : j)
    amps.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
  int n = 0;
  while ((std::size_t{1} << n) < amps.size()) ++n;
  if ((std::size_t{1} << n) != amps.size())
    throw std::invalid_argument("state length must be a power of two");
  return StateVector(n, std::move(amps));
}

nlohmann::json state_to_json(const StateVector& psi) {
  nlohmann::json out = nlohmann::json::array();
  for (const cxd& a : psi.amplitudes()) out.push_back({a.real(), a.imag()});
  return out;
}

Qumix eval_qumix_expr(const nlohmann::json& expr, const TruthPerspective& t) {
  if (!expr.is_object()) throw std::invalid_argument("qumix expression must be an object");
  if (expr.contains("pure")) {
    StateVector psi = state_from_json(expr.at("pure"));
    if (!psi.is_unit(semantic_tolerance())) psi.normalize();
    return Qumix::pure(std::move(psi));
  }
  if (expr.contains("mixed_id")) return Qumix::maximally_mixed(expr.at("mixed_id").get<int>());
  if (expr.contains("proj")) {
    const std::string which = expr.at("proj").get<std::string>();
    if (which == "0") return Qumix::pure(t.falsity_ket());
    if (which == "1") return Qumix::pure(t.truth_ket());
    throw std::invalid_argument("proj must be \"0\" or \"1\"");
  }
  if (expr.contains("tensor")) {
    const auto& parts = expr.at("tensor");
    if (!parts.is_array() || parts.empty())
      throw std::invalid_argument("tensor needs a non-empty array");
    std::optional<Qumix> acc;
    for (const auto& p : parts) {
      Qumix q = eval_qumix_expr(p, t);
      acc = acc ? tensor(*acc, q) : std::move(q);
    }
    return *acc;
  }
  if (expr.contains("mix")) {
    const auto& parts = expr.at("mix");
    std::vector<WeightedVector> members;
    for (const auto& p : parts) {
      const double w = p.at(0).get<double>();
      Qumix q = eval_qumix_expr(p.at(1), t).to_ensemble();
      for (const auto& m : q.members()) members.push_back({w * m.weight, m.vec});
    }
    return Qumix::ensemble(std::move(members));
  }
  if (expr.contains("apply")) {
    const auto& app = expr.at("apply");
    Qumix base = eval_qumix_expr(app.at("to"), t);
    bool is_and = false;
    const GateSpec g = gate_from_json(app.at("gate"), is_and);
    if (is_and) return and_gate(t, g.m, g.n, base);
    const int offset = app.contains("at") ? app.at("at").get<int>() : 0;
    return apply_gate_at(g, t, base, offset);
  }
  throw std::invalid_argument("unrecognized qumix expression");
}

TruthPerspective perspective_from_json(const nlohmann::json& j) {
  if (j.is_null()) return TruthPerspective::identity();
  if (j.contains("name")) {
    const std::string name = j.at("name").get<std::string>();
    if (name == "identity") return TruthPerspective::identity();
    if (name == "hadamard") return TruthPerspective::hadamard();
    throw std::invalid_argument("unknown truth-perspective name '" + name + "'");
  }
  if (j.contains("matrix")) {
    const auto& m = j.at("matrix");
    Eigen::Matrix2cd u;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        u(r, c) = cxd{m.at(r).at(c).at(0).get<double>(), m.at(r).at(c).at(1).get<double>()};
    return TruthPerspective(u);
  }
  throw std::invalid_argument("truth-perspective needs a name or a matrix");
}

nlohmann::json perspective_to_json(const TruthPerspective& t) {
  if (t.is_identity()) return {{"name", "identity"}};
  nlohmann::json m = nlohmann::json::array();
  for (int r = 0; r < 2; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 2; ++c) row.push_back({t.matrix()(r, c).real(), t.matrix()(r, c).imag()});
    m.push_back(row);
  }
  return {{"matrix", m}};
}

nlohmann::json qumix_to_expr(const Qumix& rho) {
  const Qumix ens = rho.to_ensemble();
  if (ens.members().size() == 1) return {{"pure", state_to_json(ens.members().front().vec)}};
  nlohmann::json mix = nlohmann::json::array();
  for (const auto& m : ens.members())
    mix.push_back({m.weight, nlohmann::json{{"pure", state_to_json(m.vec)}}});
  return {{"mix", mix}};
}

ScopedModel model_from_spec(const nlohmann::json& spec) {
  const TruthPerspective t = spec.contains("truth_perspective")
                                 ? perspective_from_json(spec.at("truth_perspective"))
                                 : TruthPerspective::identity();
  const Formula context = parse_formula(spec.at("formula").get<std::string>());
  const auto& assign = spec.at("assign");
  const Qumix seed = eval_qumix_expr(assign.at("expr"), t);

  SyntacticalTree tree(context);
  int level = 1;
  const auto& lv = assign.at("level");
  if (lv.is_string()) {
    const std::string s = lv.get<std::string>();
    if (s == "top")
      level = tree.height();
    else if (s == "bottom")
      level = 1;
    else
      throw std::invalid_argument("assign.level must be an integer, \"top\" or \"bottom\"");
  } else {
    level = lv.get<int>();
  }
  return ScopedModel(t, context, level, seed);
}

nlohmann::json model_to_spec(const ScopedModel& m, int assign_level) {
  return {{"truth_perspective", perspective_to_json(m.perspective())},
          {"formula", m.context().to_string()},
          {"assign",
           {{"level", assign_level}, {"expr", qumix_to_expr(m.level_meaning(assign_level))}}}};
}

}  // namespace hqcl
