#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wrcl/errors.hpp"
#include "wrcl/expr.hpp"
#include "wrcl/program.hpp"
#include "wrcl/state.hpp"

namespace wrcl {

namespace detail {

struct Token {
  enum class Kind { Ident, Int, Float, Punct, End } kind;
  std::string text;
  std::int64_t ival = 0;
  double fval = 0.0;
  int line = 1, column = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) {
    std::size_t i = 0;
    int line = 1, col = 1;
    auto advance = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k) {
        if (text[i + k] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      i += n;
    };
    while (i < text.size()) {
      char c = text[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
        continue;
      }
      if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
        while (i < text.size() && text[i] != '\n') advance(1);
        continue;
      }
      Token t;
      t.line = line;
      t.column = col;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
          ++j;
        t.kind = Token::Kind::Ident;
        t.text = text.substr(i, j - i);
        advance(j - i);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        bool is_float = false;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j < text.size() && text[j] == '.' && j + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
          is_float = true;
          ++j;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        }
        if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
          std::size_t k = j + 1;
          if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
          if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
            is_float = true;
            j = k;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
          }
        }
        std::string num = text.substr(i, j - i);
        if (is_float) {
          t.kind = Token::Kind::Float;
          t.fval = std::stod(num);
        } else {
          t.kind = Token::Kind::Int;
          t.ival = std::stoll(num);
        }
        t.text = num;
        advance(j - i);
      } else {
        static const char* two_char[] = {":=", "==", "!=", "<=", ">=", "&&", "||"};
        t.kind = Token::Kind::Punct;
        bool matched = false;
        for (const char* op : two_char) {
          if (text.compare(i, 2, op) == 0) {
            t.text = op;
            advance(2);
            matched = true;
            break;
          }
        }
        if (!matched) {
          t.text = std::string(1, c);
          advance(1);
        }
      }
      tokens_.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.column = col;
    tokens_.push_back(end);
  }

  const std::vector<Token>& tokens() const { return tokens_; }

private:
  std::vector<Token> tokens_;
};

}  // namespace detail

/// Recursive-descent parser for program files and the shared expression
/// syntax. A program file is a header declaring variables and the domain
/// size, followed by one statement block.
class Parser {
public:
  Parser(const std::string& text, const StateSpace* space = nullptr)
      : lexer_(text), space_(space) {}

  /// Parses "vars x, y; domain 4;" followed by the program body.
  static std::pair<StateSpace, StmtPtr> parse_program_file(const std::string& text,
                                                           std::uint64_t cap = StateSpace::kDefaultCap) {
    Parser header(text);
    header.expect_ident("vars");
    std::vector<std::string> vars;
    vars.push_back(header.expect_name());
    while (header.accept_punct(",")) vars.push_back(header.expect_name());
    header.expect_punct(";");
    header.expect_ident("domain");
    std::int64_t d = header.expect_int();
    if (d < 1) header.fail("domain size must be positive");
    header.expect_punct(";");
    StateSpace space(vars, d, cap);
    header.space_ = &space;
    StmtPtr body = header.parse_stmt();
    header.expect_end();
    return {space, body};
  }

  /// Parses a single expression against an existing state space.
  static ExprPtr parse_expression(const std::string& text, const StateSpace& space) {
    Parser p(text, &space);
    ExprPtr e = p.parse_expr();
    p.expect_end();
    return e;
  }

  // --- statements ---

  StmtPtr parse_stmt() { return parse_choice(); }

  StmtPtr parse_choice() {
    StmtPtr left = parse_seq();
    for (;;) {
      if (peek_punct("[")) {
        if (peek2_punct("]")) {
          next();
          next();
          StmtPtr right = parse_seq();
          left = mk_choice(left, right);
          continue;
        }
        // probabilistic choice  C1 [p] C2
        next();
        ExprPtr p = parse_expr();
        expect_punct("]");
        StmtPtr right = parse_seq();
        auto s = std::make_shared<Stmt>();
        s->kind = StmtKind::ProbChoice;
        s->a = left;
        s->b = right;
        s->expr = p;
        left = s;
        continue;
      }
      break;
    }
    return left;
  }

  StmtPtr parse_seq() {
    StmtPtr left = parse_postfix();
    while (accept_punct(";")) {
      if (peek_end_of_block()) break;  // tolerate trailing semicolon
      StmtPtr right = parse_postfix();
      left = mk_seq(left, right);
    }
    return left;
  }

  StmtPtr parse_postfix() {
    StmtPtr s = parse_atom();
    while (accept_punct("*")) {
      auto star = std::make_shared<Stmt>();
      star->kind = StmtKind::Star;
      star->a = s;
      s = star;
    }
    return s;
  }

  StmtPtr parse_atom() {
    const detail::Token& t = cur();
    if (t.kind == detail::Token::Kind::Ident) {
      if (t.text == "skip") {
        next();
        return mk_stmt(StmtKind::Skip);
      }
      if (t.text == "diverge") {
        next();
        return mk_stmt(StmtKind::Diverge);
      }
      if (t.text == "weight") {
        next();
        expect_punct("(");
        ExprPtr e = parse_expr();
        expect_punct(")");
        return mk_weight(e);
      }
      if (t.text == "assume") {
        next();
        expect_punct("(");
        ExprPtr e = parse_expr();
        expect_punct(")");
        auto s = std::make_shared<Stmt>();
        s->kind = StmtKind::Assume;
        s->expr = e;
        return s;
      }
      if (t.text == "if") {
        next();
        ExprPtr guard = parse_expr();
        expect_punct("{");
        StmtPtr then_branch = parse_stmt();
        expect_punct("}");
        StmtPtr else_branch;
        if (accept_ident("else")) {
          expect_punct("{");
          else_branch = parse_stmt();
          expect_punct("}");
        } else {
          else_branch = mk_stmt(StmtKind::Skip);
        }
        auto s = std::make_shared<Stmt>();
        s->kind = StmtKind::If;
        s->expr = guard;
        s->a = then_branch;
        s->b = else_branch;
        return s;
      }
      if (t.text == "while") {
        next();
        ExprPtr guard = parse_expr();
        expect_punct("{");
        StmtPtr body = parse_stmt();
        expect_punct("}");
        auto s = std::make_shared<Stmt>();
        s->kind = StmtKind::While;
        s->expr = guard;
        s->a = body;
        return s;
      }
      if (t.text == "loop") {
        next();
        expect_punct("{");
        StmtPtr body = parse_stmt();
        expect_punct("}");
        expect_ident("weight");
        ExprPtr cont = parse_expr_no_relational_block();
        expect_ident("exit");
        ExprPtr exit_w = parse_expr_no_relational_block();
        return mk_loop(body, cont, exit_w);
      }
      // assignment
      std::string name = t.text;
      int idx = resolve_var(name);
      next();
      expect_punct(":=");
      if (peek_ident("nondet")) {
        next();
        expect_punct("(");
        expect_punct(")");
        return mk_nondet_assign(idx, name);
      }
      ExprPtr rhs = parse_expr();
      return mk_assign(idx, name, rhs);
    }
    if (t.kind == detail::Token::Kind::Punct && t.text == "{") {
      next();
      StmtPtr s = parse_stmt();
      expect_punct("}");
      return s;
    }
    fail("expected a statement");
    return nullptr;
  }

  // --- expressions ---

  ExprPtr parse_expr() { return parse_or(); }

  /// Weight expressions after "weight"/"exit" keywords: same grammar,
  /// parsed greedily until the next keyword or block punctuation.
  ExprPtr parse_expr_no_relational_block() { return parse_or(); }

  ExprPtr parse_or() {
    ExprPtr e = parse_and();
    while (accept_punct("||")) e = mk_binary(ExprKind::Or, e, parse_and());
    return e;
  }

  ExprPtr parse_and() {
    ExprPtr e = parse_not();
    while (accept_punct("&&")) e = mk_binary(ExprKind::And, e, parse_not());
    return e;
  }

  ExprPtr parse_not() {
    if (accept_punct("!")) return mk_unary(ExprKind::Not, parse_not());
    return parse_cmp();
  }

  ExprPtr parse_cmp() {
    ExprPtr e = parse_add();
    struct {
      const char* tok;
      ExprKind kind;
    } ops[] = {{"==", ExprKind::Eq}, {"!=", ExprKind::Ne}, {"<=", ExprKind::Le},
               {">=", ExprKind::Ge}, {"<", ExprKind::Lt},  {">", ExprKind::Gt}};
    for (const auto& op : ops)
      if (peek_punct(op.tok)) {
        next();
        return mk_binary(op.kind, e, parse_add());
      }
    return e;
  }

  ExprPtr parse_add() {
    ExprPtr e = parse_mul();
    for (;;) {
      if (accept_punct("+"))
        e = mk_binary(ExprKind::Add, e, parse_mul());
      else if (accept_punct("-"))
        e = mk_binary(ExprKind::Sub, e, parse_mul());
      else
        break;
    }
    return e;
  }

  ExprPtr parse_mul() {
    ExprPtr e = parse_unary();
    for (;;) {
      if (accept_punct("*"))
        e = mk_binary(ExprKind::Mul, e, parse_unary());
      else if (accept_punct("%"))
        e = mk_binary(ExprKind::Mod, e, parse_unary());
      else
        break;
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (accept_punct("-")) {
      ExprPtr inner = parse_unary();
      if (inner->kind == ExprKind::IntLit) return mk_int(-inner->ival);
      if (inner->kind == ExprKind::NumberLit) return mk_number(-inner->num);
      if (inner->kind == ExprKind::InfLit) return mk_inf(!inner->negative_inf);
      return mk_unary(ExprKind::Neg, inner);
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    const detail::Token& t = cur();
    switch (t.kind) {
      case detail::Token::Kind::Int: {
        std::int64_t v = t.ival;
        next();
        return mk_int(v);
      }
      case detail::Token::Kind::Float: {
        double v = t.fval;
        next();
        return mk_number(v);
      }
      case detail::Token::Kind::Ident: {
        if (t.text == "true") {
          next();
          return mk_bool(true);
        }
        if (t.text == "false") {
          next();
          return mk_bool(false);
        }
        if (t.text == "inf") {
          next();
          return mk_inf(false);
        }
        std::string name = t.text;
        int idx = resolve_var(name);
        next();
        return mk_var(idx, name);
      }
      case detail::Token::Kind::Punct: {
        if (t.text == "(") {
          next();
          ExprPtr e = parse_expr();
          expect_punct(")");
          return e;
        }
        if (t.text == "[") {
          next();
          ExprPtr inner = parse_expr();
          expect_punct("]");
          return mk_unary(ExprKind::Iverson, inner);
        }
        if (t.text == "{") {
          next();
          std::set<std::string> words;
          if (!peek_punct("}")) {
            words.insert(expect_word());
            while (accept_punct(",")) words.insert(expect_word());
          }
          expect_punct("}");
          return mk_lang(std::move(words));
        }
        break;
      }
      default:
        break;
    }
    fail("expected an expression");
    return nullptr;
  }

  void expect_end() {
    if (cur().kind != detail::Token::Kind::End) fail("unexpected trailing input");
  }

private:
  const detail::Token& cur() const { return lexer_.tokens()[pos_]; }
  const detail::Token& peek2() const {
    std::size_t i = pos_ + 1;
    if (i >= lexer_.tokens().size()) i = lexer_.tokens().size() - 1;
    return lexer_.tokens()[i];
  }
  void next() { ++pos_; }

  bool peek_punct(const char* p) const {
    return cur().kind == detail::Token::Kind::Punct && cur().text == p;
  }
  bool peek2_punct(const char* p) const {
    return peek2().kind == detail::Token::Kind::Punct && peek2().text == p;
  }
  bool peek_ident(const char* p) const {
    return cur().kind == detail::Token::Kind::Ident && cur().text == p;
  }
  bool accept_punct(const char* p) {
    if (peek_punct(p)) {
      next();
      return true;
    }
    return false;
  }
  bool accept_ident(const char* p) {
    if (peek_ident(p)) {
      next();
      return true;
    }
    return false;
  }
  void expect_punct(const char* p) {
    if (!accept_punct(p)) fail(std::string("expected '") + p + "'");
  }
  void expect_ident(const char* p) {
    if (!accept_ident(p)) fail(std::string("expected '") + p + "'");
  }
  std::string expect_name() {
    if (cur().kind != detail::Token::Kind::Ident) fail("expected an identifier");
    std::string n = cur().text;
    next();
    return n;
  }
  std::int64_t expect_int() {
    if (cur().kind != detail::Token::Kind::Int) fail("expected an integer");
    std::int64_t v = cur().ival;
    next();
    return v;
  }
  std::string expect_word() {
    if (cur().kind != detail::Token::Kind::Ident) fail("expected a word over {a,b} or eps");
    std::string w = cur().text;
    next();
    if (w == "eps") return std::string{};
    for (char c : w)
      if (c != 'a' && c != 'b') fail("words use the alphabet {a,b}");
    return w;
  }

  bool peek_end_of_block() const {
    return cur().kind == detail::Token::Kind::End || peek_punct("}");
  }

  int resolve_var(const std::string& name) {
    if (!space_) fail("variable '" + name + "' used without a declared state space");
    int idx = space_->var_index(name);
    if (idx < 0) fail("unknown variable '" + name + "'");
    return idx;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().line, cur().column);
  }

  detail::Lexer lexer_;
  std::size_t pos_ = 0;
  const StateSpace* space_;
};

}  // namespace wrcl
