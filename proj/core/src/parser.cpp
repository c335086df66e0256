#include <cctype>

#include "ltlwb/errors.hpp"
#include "ltlwb/formula.hpp"

namespace ltlwb {

namespace {

enum class Tok { ident, kw_true, kw_false, bang, amp, bar, arrow, X, F, G, U, lpar, rpar, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::size_t at = pos_;
    if (pos_ >= s_.size()) return {Tok::end, at, {}};
    char c = s_[pos_];
    if (ident_start(c)) {
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string word(s_.substr(at, pos_ - at));
      if (word == "X") return {Tok::X, at, word};
      if (word == "F") return {Tok::F, at, word};
      if (word == "G") return {Tok::G, at, word};
      if (word == "U") return {Tok::U, at, word};
      if (word == "true") return {Tok::kw_true, at, word};
      if (word == "false") return {Tok::kw_false, at, word};
      return {Tok::ident, at, word};
    }
    ++pos_;
    switch (c) {
      case '!': return {Tok::bang, at, "!"};
      case '&': return {Tok::amp, at, "&"};
      case '|': return {Tok::bar, at, "|"};
      case '(': return {Tok::lpar, at, "("};
      case ')': return {Tok::rpar, at, ")"};
      case '-':
        if (pos_ < s_.size() && s_[pos_] == '>') {
          ++pos_;
          return {Tok::arrow, at, "->"};
        }
        break;
      default:
        break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { cur_ = lex_.next(); }

  Formula parse() {
    if (cur_.kind == Tok::end) throw ParseError("empty formula", cur_.offset);
    Formula f = implication();
    if (cur_.kind != Tok::end) throw ParseError("unexpected '" + cur_.text + "'", cur_.offset);
    return f;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  Formula implication() {
    Formula a = disjunction();
    if (cur_.kind == Tok::arrow) {
      advance();
      return Formula::implies(a, implication());
    }
    return a;
  }

  Formula disjunction() {
    Formula a = conjunction();
    while (cur_.kind == Tok::bar) {
      advance();
      a = Formula::disj(a, conjunction());
    }
    return a;
  }

  Formula conjunction() {
    Formula a = until();
    while (cur_.kind == Tok::amp) {
      advance();
      a = Formula::conj(a, until());
    }
    return a;
  }

  Formula until() {
    Formula a = unary();
    if (cur_.kind == Tok::U) {
      advance();
      return Formula::until(a, until());
    }
    return a;
  }

  Formula unary() {
    switch (cur_.kind) {
      case Tok::bang: advance(); return Formula::neg(unary());
      case Tok::X: advance(); return Formula::next(unary());
      case Tok::F: advance(); return Formula::finally(unary());
      case Tok::G: advance(); return Formula::globally(unary());
      default: return atom();
    }
  }

  Formula atom() {
    Token t = cur_;
    switch (t.kind) {
      case Tok::ident: advance(); return Formula::prop(t.text);
      case Tok::kw_true: advance(); return Formula::top();
      case Tok::kw_false: advance(); return Formula::bottom();
      case Tok::lpar: {
        advance();
        Formula f = implication();
        if (cur_.kind != Tok::rpar) throw ParseError("expected ')'", cur_.offset);
        advance();
        return f;
      }
      case Tok::end: throw ParseError("unexpected end of input", t.offset);
      default: throw ParseError("unexpected '" + t.text + "'", t.offset);
    }
  }

  Lexer lex_;
  Token cur_;
};

int precedence(Op op) {
  switch (op) {
    case Op::implies: return 1;
    case Op::disj: return 2;
    case Op::conj: return 3;
    case Op::until: return 4;
    case Op::neg: case Op::next: case Op::finally: case Op::globally: return 5;
    default: return 6;
  }
}

void print(const Formula& f, std::string& out);

void print_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print(f, out);
  if (parens) out += ')';
}

void print(const Formula& f, std::string& out) {
  Op op = f.op();
  switch (op) {
    case Op::prop: out += f.name(); return;
    case Op::top: out += "true"; return;
    case Op::bottom: out += "false"; return;
    case Op::neg: out += '!'; break;
    case Op::next: out += "X "; break;
    case Op::finally: out += "F "; break;
    case Op::globally: out += "G "; break;
    default: break;
  }
  int p = precedence(op);
  if (is_unary(op)) {
    print_operand(f.child(), precedence(f.child().op()) < p, out);
    return;
  }
  bool right_assoc = op == Op::until || op == Op::implies;
  int pl = precedence(f.lhs().op());
  int pr = precedence(f.rhs().op());
  print_operand(f.lhs(), pl < p || (pl == p && right_assoc), out);
  switch (op) {
    case Op::conj: out += " & "; break;
    case Op::disj: out += " | "; break;
    case Op::implies: out += " -> "; break;
    default: out += " U "; break;
  }
  print_operand(f.rhs(), pr < p || (pr == p && !right_assoc), out);
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace ltlwb
