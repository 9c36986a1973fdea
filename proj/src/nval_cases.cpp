#include <cmath>

#include "hqcl/suites.hpp"

namespace hqcl {

namespace {

using nlohmann::json;

json jgate(const char* name, std::initializer_list<int> args) {
  return {{"name", name}, {"args", args}};
}
json japply(json gate, json to) {
  return {{"apply", {{"gate", std::move(gate)}, {"to", std::move(to)}}}};
}
json japply_at(json gate, int at, json to) {
  return {{"apply", {{"gate", std::move(gate)}, {"at", at}, {"to", std::move(to)}}}};
}
json jtensor(std::initializer_list<json> parts) { return {{"tensor", parts}}; }
json jmix1() { return {{"mixed_id", 1}}; }
json jproj0() { return {{"proj", "0"}}; }

// Sparse pure state over n qubits from (index, amplitude) entries.
json jpure(int n, std::initializer_list<std::pair<std::uint64_t, double>> entries) {
  json amps = json::array();
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) amps.push_back({0.0, 0.0});
  for (const auto& [idx, re] : entries) amps[idx] = {re, 0.0};
  return {{"pure", amps}};
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

json singlet() { return jpure(2, {{1, kInvSqrt2}, {2, -kInvSqrt2}}); }

// T(1,1,1)(1/2 I (x) 1/2 I (x) P0): the recurring product-conjunction block.
json product_and_block() {
  return japply(jgate("T", {1, 1, 1}), jtensor({jmix1(), jmix1(), jproj0()}));
}

std::vector<NvalCase> build_cases() {
  std::vector<NvalCase> cases;

  cases.push_back({"nval-1",
                   "q1 & q1",
                   product_and_block(),
                   {{"q1", 0.5, false}, {"q1 & q1", 0.25, false}},
                   "q1",
                   "q1 & q1"});

  cases.push_back({"nval-2",
                   "(q1 & q2) & (q2 & q1)",
                   japply(jgate("T", {3, 3, 1}),
                          jtensor({product_and_block(),
                                   japply(jgate("T", {1, 1, 1}), jtensor({singlet(), jproj0()})),
                                   jproj0()})),
                   {{"q1 & q2", 0.25, false}, {"q2 & q1", 0.0, false}},
                   "q1 & q2",
                   "q2 & q1"});

  // (|01010> - |10000>)/sqrt2 over (q1, q2, f, q3, f).
  const json psi_right = jpure(5, {{10, kInvSqrt2}, {16, -kInvSqrt2}});
  cases.push_back(
      {"nval-3",
       "(q1 & (q2 & q3)) & ((q1 & q2) & q3)",
       japply(jgate("T", {5, 5, 1}),
              jtensor({japply(jgate("T", {1, 3, 1}),
                              jtensor({jmix1(), product_and_block(), jproj0()})),
                       japply(jgate("T", {3, 1, 1}),
                              japply_at(jgate("T", {1, 1, 1}), 0, psi_right)),
                       jproj0()})),
       {{"q1 & (q2 & q3)", 0.125, false}, {"(q1 & q2) & q3", 0.0, false}},
       "q1 & (q2 & q3)",
       "(q1 & q2) & q3"});

  // Mirror of nval-3: (|01100> - |10000>)/sqrt2 over (q1, q2, q3, f, f).
  const json psi_left = jpure(5, {{12, kInvSqrt2}, {16, -kInvSqrt2}});
  cases.push_back(
      {"nval-4",
       "(q1 & (q2 & q3)) & ((q1 & q2) & q3)",
       japply(jgate("T", {5, 5, 1}),
              jtensor({japply(jgate("T", {1, 3, 1}),
                              japply_at(jgate("T", {1, 1, 1}), 1, psi_left)),
                       japply(jgate("T", {3, 1, 1}),
                              jtensor({product_and_block(), jmix1(), jproj0()})),
                       jproj0()})),
       {{"(q1 & q2) & q3", 0.125, true}, {"q1 & (q2 & q3)", 0.0, true}},
       "(q1 & q2) & q3",
       "q1 & (q2 & q3)"});

  const json or_of_ands =
      japply(jgate("NOT", {7}),
             japply(jgate("T", {3, 3, 1}),
                    jtensor({japply(jgate("NOT", {3}), product_and_block()),
                             japply(jgate("NOT", {3}), product_and_block()), jproj0()})));
  cases.push_back(
      {"nval-5",
       "(q1 & (q2 | q3)) & ((q1 & q2) | (q1 & q3))",
       japply(jgate("T", {5, 7, 1}),
              jtensor({japply(jgate("T", {1, 3, 1}),
                              jtensor({jmix1(),
                                       japply(jgate("NOT", {3}),
                                              japply(jgate("T", {1, 1, 1}),
                                                     jtensor({singlet(), jproj0()}))),
                                       jproj0()})),
                       or_of_ands, jproj0()})),
       {{"q1 & (q2 | q3)", 0.5, false}, {"(q1 & q2) | (q1 & q3)", 0.4375, false}},
       "q1 & (q2 | q3)",
       "(q1 & q2) | (q1 & q3)"});

  cases.push_back(
      {"nval-6",
       "(q1 & (q2 | q3)) & ((q1 & q2) | (q1 & q3))",
       japply(jgate("T", {5, 7, 1}),
              jtensor({japply(jgate("T", {1, 3, 1}),
                              jtensor({jmix1(), japply(jgate("NOT", {3}), product_and_block()),
                                       jproj0()})),
                       or_of_ands, jproj0()})),
       {{"(q1 & q2) | (q1 & q3)", 0.4375, false}, {"q1 & (q2 | q3)", 0.375, false}},
       "(q1 & q2) | (q1 & q3)",
       "q1 & (q2 | q3)"});

  cases.push_back({"nval-7",
                   "(q1 & q2) & q3",
                   japply(jgate("T", {3, 1, 1}),
                          jtensor({product_and_block(), jmix1(), jproj0()})),
                   {{"q1", 0.5, false},
                    {"q2", 0.5, false},
                    {"q3", 0.5, false},
                    {"q1 & q2", 0.25, false}},
                   "q3",
                   "q1 & q2"});

  cases.push_back({"nval-8",
                   "(q1 & ~q1) & q2",
                   japply(jgate("T", {3, 1, 1}),
                          jtensor({product_and_block(), jproj0(), jproj0()})),
                   {{"q1 & ~q1", 0.25, false}, {"q2", 0.0, false}},
                   "q1 & ~q1",
                   "q2"});

  cases.push_back(
      {"nval-9",
       "(q1 (+) q2) & (q2 (+) q1)",
       japply(jgate("T", {2, 2, 1}),
              jtensor({japply(jgate("XOR", {1, 1}), singlet()),
                       japply(jgate("XOR", {1, 1}), jtensor({jmix1(), jmix1()})), jproj0()})),
       {{"q1 (+) q2", 1.0, false}, {"q2 (+) q1", 0.5, false}},
       "q1 (+) q2",
       "q2 (+) q1"});

  cases.push_back(
      {"nval-10",
       "(q1 (+) q2) & (q1 | q2)",
       japply(jgate("T", {2, 3, 1}),
              jtensor({japply(jgate("XOR", {1, 1}), singlet()),
                       japply(jgate("NOT", {3}),
                              japply(jgate("T", {1, 1, 1}),
                                     japply_at(jgate("NOT", {1}), 0,
                                               japply_at(jgate("NOT", {1}), 1,
                                                         jtensor({jmix1(), jmix1(), jproj0()}))))),
                       jproj0()})),
       {{"q1 (+) q2", 1.0, false}, {"q1 | q2", 0.75, false}},
       "q1 (+) q2",
       "q1 | q2"});

  return cases;
}

}  // namespace

const std::vector<NvalCase>& builtin_nval_cases() {
  static const std::vector<NvalCase> cases = build_cases();
  return cases;
}

}  // namespace hqcl
