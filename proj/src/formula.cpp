#include "hqcl/formula.hpp"

#include <algorithm>
#include <set>

namespace hqcl {

Formula Formula::make(FormulaKind k, int atom_id, std::vector<Formula> kids) {
  int at = 0;
  if (kids.empty())
    at = 1;  // atoms and constants each occupy one qubit
  else
    for (const Formula& c : kids) at += c.atomic_complexity();
  auto node = std::make_shared<Node>(Node{k, atom_id, at, std::move(kids)});
  return Formula(std::move(node));
}

Formula Formula::atom(int id) {
  if (id <= 0) throw std::invalid_argument("atom ids are positive integers");
  return make(FormulaKind::Atom, id, {});
}
Formula Formula::t() { return make(FormulaKind::True, 0, {}); }
Formula Formula::f() { return make(FormulaKind::False, 0, {}); }
Formula Formula::not_of(Formula a) { return make(FormulaKind::Not, 0, {std::move(a)}); }
Formula Formula::sqrt_id_of(Formula a) { return make(FormulaKind::SqrtId, 0, {std::move(a)}); }
Formula Formula::sqrt_not_of(Formula a) { return make(FormulaKind::SqrtNot, 0, {std::move(a)}); }
Formula Formula::toffoli_of(Formula a, Formula b, Formula c) {
  return make(FormulaKind::Toffoli, 0, {std::move(a), std::move(b), std::move(c)});
}
Formula Formula::xor_of(Formula a, Formula b) {
  return make(FormulaKind::Xor, 0, {std::move(a), std::move(b)});
}
Formula Formula::and_of(Formula a, Formula b) {
  return toffoli_of(std::move(a), std::move(b), f());
}
Formula Formula::or_of(Formula a, Formula b) {
  return not_of(toffoli_of(not_of(std::move(a)), not_of(std::move(b)), f()));
}

bool Formula::is_atomic() const {
  return kind() == FormulaKind::Atom || kind() == FormulaKind::True ||
         kind() == FormulaKind::False;
}

bool Formula::is_boolean() const {
  if (kind() == FormulaKind::SqrtId || kind() == FormulaKind::SqrtNot) return false;
  for (const Formula& c : node_->kids)
    if (!c.is_boolean()) return false;
  return true;
}

std::vector<int> Formula::atoms() const {
  std::set<int> ids;
  auto walk = [&](auto&& self, const Formula& f) -> void {
    if (f.kind() == FormulaKind::Atom) ids.insert(f.atom_id());
    for (int i = 0; i < f.arity(); ++i) self(self, f.child(i));
  };
  walk(walk, *this);
  return {ids.begin(), ids.end()};
}

bool Formula::contains(const Formula& sub) const {
  if (*this == sub) return true;
  for (const Formula& c : node_->kids)
    if (c.contains(sub)) return true;
  return false;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind || node_->atom_id != other.node_->atom_id ||
      node_->kids.size() != other.node_->kids.size() || node_->at != other.node_->at)
    return false;
  for (std::size_t i = 0; i < node_->kids.size(); ++i)
    if (node_->kids[i] != other.node_->kids[i]) return false;
  return true;
}

namespace {

// Precedence: (+) < | < & < unary < atoms and T(...).
enum Prec { kXor = 1, kOr = 2, kAnd = 3, kUnary = 4, kAtomLike = 5 };

bool is_and_sugar(const Formula& f) {
  return f.kind() == FormulaKind::Toffoli && f.child(2).kind() == FormulaKind::False;
}

bool is_or_sugar(const Formula& f) {
  if (f.kind() != FormulaKind::Not) return false;
  const Formula inner = f.child(0);
  return is_and_sugar(inner) && inner.child(0).kind() == FormulaKind::Not &&
         inner.child(1).kind() == FormulaKind::Not;
}

int precedence_of(const Formula& f) {
  if (f.is_atomic()) return kAtomLike;
  if (is_or_sugar(f)) return kOr;
  if (is_and_sugar(f)) return kAnd;
  switch (f.kind()) {
    case FormulaKind::Xor:
      return kXor;
    case FormulaKind::Not:
    case FormulaKind::SqrtId:
    case FormulaKind::SqrtNot:
      return kUnary;
    default:
      return kAtomLike;  // general T(.,.,.) prints like a function call
  }
}

void print(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, int min_prec, std::string& out) {
  if (precedence_of(f) < min_prec) {
    out += '(';
    print(f, out);
    out += ')';
  } else {
    print(f, out);
  }
}

void print_binary(const Formula& lhs, const char* op, const Formula& rhs, int prec,
                  std::string& out) {
  print_wrapped(lhs, prec, out);  // left-associative
  out += op;
  print_wrapped(rhs, prec + 1, out);
}

void print(const Formula& f, std::string& out) {
  if (is_or_sugar(f)) {
    const Formula inner = f.child(0);
    print_binary(inner.child(0).child(0), " | ", inner.child(1).child(0), kOr, out);
    return;
  }
  if (is_and_sugar(f)) {
    print_binary(f.child(0), " & ", f.child(1), kAnd, out);
    return;
  }
  switch (f.kind()) {
    case FormulaKind::Atom:
      out += 'q';
      out += std::to_string(f.atom_id());
      break;
    case FormulaKind::True:
      out += 't';
      break;
    case FormulaKind::False:
      out += 'f';
      break;
    case FormulaKind::Not:
      out += '~';
      print_wrapped(f.child(0), kUnary, out);
      break;
    case FormulaKind::SqrtId:
      out += "sid ";
      print_wrapped(f.child(0), kUnary, out);
      break;
    case FormulaKind::SqrtNot:
      out += "snot ";
      print_wrapped(f.child(0), kUnary, out);
      break;
    case FormulaKind::Toffoli:
      out += "T(";
      print(f.child(0), out);
      out += ", ";
      print(f.child(1), out);
      out += ", ";
      print(f.child(2), out);
      out += ')';
      break;
    case FormulaKind::Xor:
      print_binary(f.child(0), " (+) ", f.child(1), kXor, out);
      break;
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

}  // namespace hqcl
