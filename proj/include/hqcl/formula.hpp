#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hqcl {

enum class FormulaKind { Atom, True, False, Not, SqrtId, SqrtNot, Toffoli, Xor };

// Immutable AST of the quantum computational language. And/or exist only as
// parser sugar: a & b == T(a,b,f) and a | b == ~(~a & ~b).
class Formula {
 public:
  static Formula atom(int id);
  static Formula t();
  static Formula f();
  static Formula not_of(Formula a);
  static Formula sqrt_id_of(Formula a);
  static Formula sqrt_not_of(Formula a);
  static Formula toffoli_of(Formula a, Formula b, Formula c);
  static Formula xor_of(Formula a, Formula b);
  static Formula and_of(Formula a, Formula b);
  static Formula or_of(Formula a, Formula b);

  FormulaKind kind() const { return node_->kind; }
  int atom_id() const { return node_->atom_id; }
  int arity() const { return static_cast<int>(node_->kids.size()); }
  Formula child(int i) const { return node_->kids[i]; }

  bool is_atomic() const;     // Atom, True or False
  bool is_boolean() const;    // free of sqrt-id / sqrt-not
  int atomic_complexity() const { return node_->at; }
  std::vector<int> atoms() const;  // sorted distinct ids
  bool contains(const Formula& sub) const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  std::string to_string() const;  // minimal parentheses, sugar-aware

 private:
  struct Node {
    FormulaKind kind;
    int atom_id;
    int at;
    std::vector<Formula> kids;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(FormulaKind k, int atom_id, std::vector<Formula> kids);
  std::shared_ptr<const Node> node_;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), pos(position) {}
  std::size_t pos;
};

// Grammar:
//   formula := disj { "(+)" disj }
//   disj    := conj { "|" conj }
//   conj    := unary { "&" unary }
//   unary   := "~" unary | "sid" unary | "snot" unary
//            | "T" "(" formula "," formula "," formula ")"
//            | atom | "t" | "f" | "(" formula ")"
//   atom    := "q" digits
Formula parse_formula(std::string_view text);

}  // namespace hqcl
