#include <cctype>
#include <string>
#include <vector>

#include "hqcl/formula.hpp"

namespace hqcl {
namespace {

enum class Tok { LParen, RParen, Comma, Tilde, Amp, Pipe, OPlus, Sid, Snot, Tof, True, False, Atom, End };

struct Token {
  Tok kind;
  int atom_id = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (i_ >= text_.size()) {
        out.push_back({Tok::End, 0, i_});
        return out;
      }
      const std::size_t start = i_;
      const char c = text_[i_];
      if (c == '(') {
        if (i_ + 2 < text_.size() && text_[i_ + 1] == '+' && text_[i_ + 2] == ')') {
          i_ += 3;
          out.push_back({Tok::OPlus, 0, start});
        } else {
          ++i_;
          out.push_back({Tok::LParen, 0, start});
        }
      } else if (c == ')') {
        ++i_;
        out.push_back({Tok::RParen, 0, start});
      } else if (c == ',') {
        ++i_;
        out.push_back({Tok::Comma, 0, start});
      } else if (c == '~') {
        ++i_;
        out.push_back({Tok::Tilde, 0, start});
      } else if (c == '&') {
        ++i_;
        out.push_back({Tok::Amp, 0, start});
      } else if (c == '|') {
        ++i_;
        out.push_back({Tok::Pipe, 0, start});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        out.push_back(lex_word(start));
      } else {
        throw ParseError(std::string("unknown token '") + c + "'", start);
      }
    }
  }

 private:
  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  Token lex_word(std::size_t start) {
    std::size_t j = i_;
    while (j < text_.size() && std::isalpha(static_cast<unsigned char>(text_[j]))) ++j;
    std::string word(text_.substr(i_, j - i_));
    std::size_t digits_start = j;
    while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
    std::string digits(text_.substr(digits_start, j - digits_start));
    i_ = j;
    if (word == "q") {
      if (digits.empty()) throw ParseError("atom needs an index, e.g. q1", start);
      long id = std::stol(digits);
      if (id <= 0) throw ParseError("atom ids are positive integers", start);
      return {Tok::Atom, static_cast<int>(id), start};
    }
    if (!digits.empty()) throw ParseError("unknown token '" + word + digits + "'", start);
    if (word == "t") return {Tok::True, 0, start};
    if (word == "f") return {Tok::False, 0, start};
    if (word == "sid") return {Tok::Sid, 0, start};
    if (word == "snot") return {Tok::Snot, 0, start};
    if (word == "T") return {Tok::Tof, 0, start};
    throw ParseError("unknown token '" + word + "'", start);
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = parse_xor();
    expect(Tok::End, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token next() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const char* msg) {
    if (!accept(k)) throw ParseError(msg, peek().pos);
  }

  Formula parse_xor() {
    Formula f = parse_or();
    while (accept(Tok::OPlus)) f = Formula::xor_of(f, parse_or());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Pipe)) f = Formula::or_of(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::Amp)) f = Formula::and_of(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    const Token tok = next();
    switch (tok.kind) {
      case Tok::Tilde:
        return Formula::not_of(parse_unary());
      case Tok::Sid:
        return Formula::sqrt_id_of(parse_unary());
      case Tok::Snot:
        return Formula::sqrt_not_of(parse_unary());
      case Tok::Tof: {
        expect(Tok::LParen, "expected '(' after T");
        Formula a = parse_xor();
        expect(Tok::Comma, "expected ',' in T(...)");
        Formula b = parse_xor();
        expect(Tok::Comma, "expected second ',' in T(...)");
        Formula c = parse_xor();
        expect(Tok::RParen, "expected ')' closing T(...)");
        return Formula::toffoli_of(a, b, c);
      }
      case Tok::Atom:
        return Formula::atom(tok.atom_id);
      case Tok::True:
        return Formula::t();
      case Tok::False:
        return Formula::f();
      case Tok::LParen: {
        Formula f = parse_xor();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
      default:
        throw ParseError("expected a formula", tok.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

}  // namespace hqcl
