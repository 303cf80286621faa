#include "folbox/text.hpp"

#include <cctype>
#include <vector>

#include "folbox/errors.hpp"
#include "folbox/syntax.hpp"

namespace folbox {
namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Not, And, Or, Arrow, DArrow, Box, Dia, Eq, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto rest = s.substr(i);
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(rest.substr(0, len)), start});
      i += len;
    };
    if (rest.starts_with("<->")) emit(Tok::DArrow, 3);
    else if (rest.starts_with("->")) emit(Tok::Arrow, 2);
    else if (rest.starts_with("[]")) emit(Tok::Box, 2);
    else if (rest.starts_with("<>")) emit(Tok::Dia, 2);
    else if (c == '(') emit(Tok::LParen, 1);
    else if (c == ')') emit(Tok::RParen, 1);
    else if (c == ',') emit(Tok::Comma, 1);
    else if (c == '.') emit(Tok::Dot, 1);
    else if (c == '~') emit(Tok::Not, 1);
    else if (c == '&') emit(Tok::And, 1);
    else if (c == '|') emit(Tok::Or, 1);
    else if (c == '=') emit(Tok::Eq, 1);
    else throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Formula parse() {
    Formula f = parse_iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(peek().kind == Tok::End ? what + " (end of input)" : what, peek().pos);
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }

  Formula parse_iff() {
    Formula l = parse_imp();
    while (accept(Tok::DArrow)) l = iff(l, parse_imp());
    return l;
  }

  Formula parse_imp() {
    Formula l = parse_or();
    if (accept(Tok::Arrow)) return imp(l, parse_imp());
    return l;
  }

  Formula parse_or() {
    Formula l = parse_and();
    while (accept(Tok::Or)) l = disj(l, parse_and());
    return l;
  }

  Formula parse_and() {
    Formula l = parse_unary();
    while (accept(Tok::And)) l = conj(l, parse_unary());
    return l;
  }

  Formula parse_unary() {
    if (accept(Tok::Not)) return neg(parse_unary());
    if (accept(Tok::Box)) return box(parse_unary());
    if (accept(Tok::Dia)) return diamond(parse_unary());
    if (peek().kind == Tok::Ident && (peek().text == "forall" || peek().text == "exists")) {
      const bool universal = next().text == "forall";
      Var x = parse_var();
      expect(Tok::Dot, "'.' after bound variable");
      Formula body = parse_iff();
      return universal ? forall(std::move(x), std::move(body))
                       : exists(std::move(x), std::move(body));
    }
    return parse_primary();
  }

  Var parse_var() {
    if (peek().kind != Tok::Ident || !is_variable_name(peek().text)) fail("expected variable");
    return Var{next().text};
  }

  Formula parse_primary() {
    if (accept(Tok::LParen)) {
      Formula f = parse_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek().kind != Tok::Ident) fail("expected formula");
    if (is_predicate_name(peek().text)) {
      std::string name = next().text;
      std::vector<Var> args;
      if (accept(Tok::LParen)) {
        if (!accept(Tok::RParen)) {
          do {
            args.push_back(parse_var());
          } while (accept(Tok::Comma));
          expect(Tok::RParen, "')' or ','");
        }
      }
      return atom(std::move(name), std::move(args));
    }
    Var x = parse_var();
    expect(Tok::Eq, "'=' after variable");
    Var y = parse_var();
    return eq(std::move(x), std::move(y));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer.
enum Level { kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5, kOperand = 6 };

Level level_of(Kind k) {
  switch (k) {
    case Kind::Iff: return kIff;
    case Kind::Impl: return kImp;
    case Kind::Or: return kOr;
    case Kind::And: return kAnd;
    default: return kUnary;
  }
}

const char* symbol_of(Kind k) {
  switch (k) {
    case Kind::Iff: return " <-> ";
    case Kind::Impl: return " -> ";
    case Kind::Or: return " | ";
    case Kind::And: return " & ";
    case Kind::Not: return "~";
    case Kind::Box: return "[]";
    case Kind::Diamond: return "<>";
    case Kind::Forall: return "forall ";
    default: return "exists ";
  }
}

// `min_level`: the weakest connective allowed without parentheses here.
// `followed`: more text follows in the same group, so an open binder body
// must be closed off.
void print(const Formula& a, int min_level, bool followed, std::string& out) {
  const Kind k = a.kind();
  if (k == Kind::Atom) {
    out += a.predicate_name();
    if (!a.args().empty()) {
      out += '(';
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (i) out += ", ";
        out += a.args()[i].name;
      }
      out += ')';
    }
    return;
  }
  if (k == Kind::Eq) {
    const bool wrap = min_level >= kOperand;
    if (wrap) out += '(';
    out += a.args()[0].name + " = " + a.args()[1].name;
    if (wrap) out += ')';
    return;
  }
  if (is_binder(k)) {
    if (followed) out += '(';
    out += symbol_of(k);
    out += a.bound().name + ". ";
    print(a.operand(), kIff, false, out);
    if (followed) out += ')';
    return;
  }
  if (k == Kind::Not || is_modal(k)) {
    out += symbol_of(k);
    print(a.operand(), kOperand, followed, out);
    return;
  }
  const int lvl = level_of(k);
  const bool wrap = lvl < min_level;
  if (wrap) {
    out += '(';
    followed = false;
  }
  const bool right_assoc = k == Kind::Impl;
  print(a.lhs(), right_assoc ? lvl + 1 : lvl, true, out);
  out += symbol_of(k);
  print(a.rhs(), right_assoc ? lvl : lvl + 1, followed, out);
  if (wrap) out += ')';
}

}  // namespace

bool is_variable_name(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return s != "forall" && s != "exists";
}

bool is_predicate_name(std::string_view s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return true;
}

Formula parse_formula(std::string_view text) {
  Formula f = Parser(text).parse();
  signature(f);
  return f;
}

std::string print_formula(const Formula& a) {
  std::string out;
  print(a, kIff, false, out);
  return out;
}

}  // namespace folbox
