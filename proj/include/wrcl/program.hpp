#pragma once

#include <memory>
#include <string>

#include "wrcl/expr.hpp"

namespace wrcl {

/// Statement nodes. The parser produces the full set; after elaboration
/// only the six core constructors remain: Assign, NondetAssign, Weight,
/// Seq, Choice, Loop.
enum class StmtKind {
  // core
  Assign,
  NondetAssign,
  Weight,
  Seq,
  Choice,
  Loop,
  // sugar
  Skip,
  Diverge,
  Assume,
  If,
  While,
  ProbChoice,
  Star,
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  StmtKind kind;
  int var = -1;            // Assign / NondetAssign
  std::string var_name;
  ExprPtr expr;            // Assign rhs, Weight / Assume body, If / While guard,
                           // ProbChoice probability, Loop continue-weight
  ExprPtr expr2;           // Loop exit-weight
  StmtPtr a, b;            // children
  int line = 0, column = 0;
};

inline StmtPtr mk_stmt(StmtKind k) {
  auto s = std::make_shared<Stmt>();
  s->kind = k;
  return s;
}

inline StmtPtr mk_assign(int var, std::string name, ExprPtr rhs) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Assign;
  s->var = var;
  s->var_name = std::move(name);
  s->expr = std::move(rhs);
  return s;
}

inline StmtPtr mk_nondet_assign(int var, std::string name) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::NondetAssign;
  s->var = var;
  s->var_name = std::move(name);
  return s;
}

inline StmtPtr mk_weight(ExprPtr e) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Weight;
  s->expr = std::move(e);
  return s;
}

inline StmtPtr mk_seq(StmtPtr a, StmtPtr b) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Seq;
  s->a = std::move(a);
  s->b = std::move(b);
  return s;
}

inline StmtPtr mk_choice(StmtPtr a, StmtPtr b) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Choice;
  s->a = std::move(a);
  s->b = std::move(b);
  return s;
}

inline StmtPtr mk_loop(StmtPtr body, ExprPtr cont, ExprPtr exit) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Loop;
  s->a = std::move(body);
  s->expr = std::move(cont);
  s->expr2 = std::move(exit);
  return s;
}

inline bool is_core(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::Assign:
    case StmtKind::NondetAssign:
    case StmtKind::Weight:
      return true;
    case StmtKind::Seq:
    case StmtKind::Choice:
      return is_core(*s.a) && is_core(*s.b);
    case StmtKind::Loop:
      return is_core(*s.a);
    default:
      return false;
  }
}

inline std::string stmt_to_string(const Stmt& s, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  switch (s.kind) {
    case StmtKind::Assign:
      return pad + s.var_name + " := " + expr_to_string(*s.expr);
    case StmtKind::NondetAssign:
      return pad + s.var_name + " := nondet()";
    case StmtKind::Weight:
      return pad + "weight(" + expr_to_string(*s.expr) + ")";
    case StmtKind::Seq:
      return stmt_to_string(*s.a, indent) + ";\n" + stmt_to_string(*s.b, indent);
    case StmtKind::Choice:
      return pad + "{\n" + stmt_to_string(*s.a, indent + 1) + "\n" + pad + "} [] {\n" +
             stmt_to_string(*s.b, indent + 1) + "\n" + pad + "}";
    case StmtKind::Loop:
      return pad + "loop {\n" + stmt_to_string(*s.a, indent + 1) + "\n" + pad +
             "} weight " + expr_to_string(*s.expr) + " exit " + expr_to_string(*s.expr2);
    case StmtKind::Skip:
      return pad + "skip";
    case StmtKind::Diverge:
      return pad + "diverge";
    case StmtKind::Assume:
      return pad + "assume(" + expr_to_string(*s.expr) + ")";
    case StmtKind::If:
      return pad + "if " + expr_to_string(*s.expr) + " {\n" +
             stmt_to_string(*s.a, indent + 1) + "\n" + pad + "} else {\n" +
             stmt_to_string(*s.b, indent + 1) + "\n" + pad + "}";
    case StmtKind::While:
      return pad + "while " + expr_to_string(*s.expr) + " {\n" +
             stmt_to_string(*s.a, indent + 1) + "\n" + pad + "}";
    case StmtKind::ProbChoice:
      return pad + "{\n" + stmt_to_string(*s.a, indent + 1) + "\n" + pad + "} [" +
             expr_to_string(*s.expr) + "] {\n" + stmt_to_string(*s.b, indent + 1) + "\n" +
             pad + "}";
    case StmtKind::Star:
      return pad + "{\n" + stmt_to_string(*s.a, indent + 1) + "\n" + pad + "}*";
  }
  return pad + "?";
}

}  // namespace wrcl
