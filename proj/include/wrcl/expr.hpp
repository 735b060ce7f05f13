#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "wrcl/errors.hpp"
#include "wrcl/semiring.hpp"
#include "wrcl/state.hpp"

namespace wrcl {

/// Expression trees shared by arithmetic positions (domain integers),
/// guard positions (booleans) and weight positions (semiring values).
/// Boolean expressions coerce to weights through Iverson brackets.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind {
  IntLit,     // integer literal
  NumberLit,  // numeric weight literal (e.g. 0.5)
  InfLit,     // +inf / -inf weight literal
  LangLit,    // finite language literal, e.g. {a, ab}
  BoolLit,
  Var,
  Neg,        // arithmetic negation
  Add, Sub, Mul, Mod,
  Eq, Ne, Lt, Le, Gt, Ge,
  And, Or, Not,
  Iverson,    // [b]: predicate coerced to a semiring value
  OneMinus,   // 1 - w, for probabilistic choice elaboration
};

struct Expr {
  ExprKind kind;
  std::int64_t ival = 0;
  double num = 0.0;
  bool negative_inf = false;
  std::set<std::string> words;
  int var = -1;
  std::string var_name;
  ExprPtr a, b;
};

inline ExprPtr mk_int(std::int64_t v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::IntLit;
  e->ival = v;
  return e;
}
inline ExprPtr mk_number(double v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::NumberLit;
  e->num = v;
  return e;
}
inline ExprPtr mk_inf(bool negative) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::InfLit;
  e->negative_inf = negative;
  return e;
}
inline ExprPtr mk_lang(std::set<std::string> words) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::LangLit;
  e->words = std::move(words);
  return e;
}
inline ExprPtr mk_bool(bool v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::BoolLit;
  e->ival = v ? 1 : 0;
  return e;
}
inline ExprPtr mk_var(int index, std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Var;
  e->var = index;
  e->var_name = std::move(name);
  return e;
}
inline ExprPtr mk_unary(ExprKind k, ExprPtr a) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = std::move(a);
  return e;
}
inline ExprPtr mk_binary(ExprKind k, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

enum class ExprType { Int, Bool, Weight };

/// Natural type of an expression; Mul/Add are integer operators unless a
/// weight leaf forces the weight reading.
inline ExprType infer_type(const Expr& e) {
  switch (e.kind) {
    case ExprKind::IntLit:
    case ExprKind::Var:
    case ExprKind::Neg:
    case ExprKind::Sub:
    case ExprKind::Mod:
      return ExprType::Int;
    case ExprKind::BoolLit:
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge:
    case ExprKind::And:
    case ExprKind::Or:
    case ExprKind::Not:
      return ExprType::Bool;
    case ExprKind::NumberLit:
    case ExprKind::InfLit:
    case ExprKind::LangLit:
    case ExprKind::Iverson:
    case ExprKind::OneMinus:
      return ExprType::Weight;
    case ExprKind::Add:
    case ExprKind::Mul: {
      ExprType ta = infer_type(*e.a), tb = infer_type(*e.b);
      if (ta == ExprType::Int && tb == ExprType::Int) return ExprType::Int;
      return ExprType::Weight;
    }
  }
  return ExprType::Int;
}

/// Every expression is usable in a weight position: booleans coerce via
/// Iverson brackets and integers embed through the semiring's numeric
/// embedding (checked at evaluation time).
inline bool weight_compatible(const Expr&) { return true; }

inline std::int64_t eval_arith(const Expr& e, const State& s);
inline bool eval_bool(const Expr& e, const State& s);

inline std::int64_t eval_arith(const Expr& e, const State& s) {
  switch (e.kind) {
    case ExprKind::IntLit: return e.ival;
    case ExprKind::Var: return s[static_cast<std::size_t>(e.var)];
    case ExprKind::Neg: return -eval_arith(*e.a, s);
    case ExprKind::Add: return eval_arith(*e.a, s) + eval_arith(*e.b, s);
    case ExprKind::Sub: return eval_arith(*e.a, s) - eval_arith(*e.b, s);
    case ExprKind::Mul: return eval_arith(*e.a, s) * eval_arith(*e.b, s);
    case ExprKind::Mod: {
      std::int64_t m = eval_arith(*e.b, s);
      if (m <= 0) throw TypeMismatchError("modulus must be positive");
      std::int64_t r = eval_arith(*e.a, s) % m;
      return r < 0 ? r + m : r;
    }
    default:
      throw TypeMismatchError("expected an arithmetic expression");
  }
}

inline bool eval_bool(const Expr& e, const State& s) {
  switch (e.kind) {
    case ExprKind::BoolLit: return e.ival != 0;
    case ExprKind::Eq: return eval_arith(*e.a, s) == eval_arith(*e.b, s);
    case ExprKind::Ne: return eval_arith(*e.a, s) != eval_arith(*e.b, s);
    case ExprKind::Lt: return eval_arith(*e.a, s) < eval_arith(*e.b, s);
    case ExprKind::Le: return eval_arith(*e.a, s) <= eval_arith(*e.b, s);
    case ExprKind::Gt: return eval_arith(*e.a, s) > eval_arith(*e.b, s);
    case ExprKind::Ge: return eval_arith(*e.a, s) >= eval_arith(*e.b, s);
    case ExprKind::And: return eval_bool(*e.a, s) && eval_bool(*e.b, s);
    case ExprKind::Or: return eval_bool(*e.a, s) || eval_bool(*e.b, s);
    case ExprKind::Not: return !eval_bool(*e.a, s);
    default:
      throw TypeMismatchError("expected a boolean expression");
  }
}

/// Weight evaluation. Numeric literals embed per semiring; booleans become
/// Iverson brackets; Mul/Add act in the semiring.
template <Semiring S>
typename S::value_type eval_weight(const S& sr, const Expr& e, const State& s) {
  using V = typename S::value_type;
  switch (e.kind) {
    case ExprKind::NumberLit: {
      auto v = sr.from_number(e.num);
      if (!v)
        throw TypeMismatchError("numeric weight " + std::to_string(e.num) +
                                " is not a value of semiring " + sr.name());
      return *v;
    }
    case ExprKind::InfLit: {
      if constexpr (std::is_same_v<S, TropicalSemiring>) {
        if (e.negative_inf) throw TypeMismatchError("-inf is not a tropical value");
        return TropicalSemiring::inf();
      } else if constexpr (std::is_same_v<S, MaxMinSemiring>) {
        return e.negative_inf ? -MaxMinSemiring::inf() : MaxMinSemiring::inf();
      } else {
        throw TypeMismatchError("inf literal is not a value of semiring " + sr.name());
      }
    }
    case ExprKind::LangLit: {
      if constexpr (std::is_same_v<S, LangSemiring>) {
        for (const auto& w : e.words)
          if (w.size() > sr.max_word_length())
            throw TypeMismatchError("word '" + w + "' exceeds the length cutoff");
        return e.words;
      } else {
        throw TypeMismatchError("language literal is not a value of semiring " + sr.name());
      }
    }
    case ExprKind::Iverson:
      return eval_bool(*e.a, s) ? sr.one() : sr.zero();
    case ExprKind::OneMinus: {
      V v = eval_weight(sr, *e.a, s);
      if constexpr (std::is_same_v<S, ProbSemiring>) {
        return 1.0 - v;
      } else if constexpr (std::is_same_v<S, BoolSemiring>) {
        return static_cast<V>(v ? 0 : 1);
      } else {
        throw TypeMismatchError("1 - w is not defined for semiring " + sr.name());
      }
    }
    case ExprKind::Add: {
      if (infer_type(e) == ExprType::Int) break;
      return sr.add(eval_weight(sr, *e.a, s), eval_weight(sr, *e.b, s));
    }
    case ExprKind::Mul: {
      if (infer_type(e) == ExprType::Int) break;
      return sr.mul(eval_weight(sr, *e.a, s), eval_weight(sr, *e.b, s));
    }
    default:
      break;
  }
  // Boolean expressions coerce to Iverson brackets; integer expressions
  // embed through the semiring's numeric embedding.
  ExprType t = infer_type(e);
  if (t == ExprType::Bool) return eval_bool(e, s) ? sr.one() : sr.zero();
  if (t == ExprType::Int) {
    auto v = sr.from_number(static_cast<double>(eval_arith(e, s)));
    if (!v)
      throw TypeMismatchError("integer weight does not embed into semiring " + sr.name());
    return *v;
  }
  throw TypeMismatchError("expected a weight expression");
}

inline std::string expr_to_string(const Expr& e) {
  auto bin = [&](const char* op) {
    return "(" + expr_to_string(*e.a) + " " + op + " " + expr_to_string(*e.b) + ")";
  };
  switch (e.kind) {
    case ExprKind::IntLit: return std::to_string(e.ival);
    case ExprKind::NumberLit: {
      std::ostringstream os;
      os.precision(12);
      os << e.num;
      return os.str();
    }
    case ExprKind::InfLit: return e.negative_inf ? "-inf" : "inf";
    case ExprKind::LangLit: {
      std::string out = "{";
      bool first = true;
      for (const auto& w : e.words) {
        if (!first) out += ", ";
        out += w.empty() ? "eps" : w;
        first = false;
      }
      return out + "}";
    }
    case ExprKind::BoolLit: return e.ival ? "true" : "false";
    case ExprKind::Var: return e.var_name;
    case ExprKind::Neg: return "(-" + expr_to_string(*e.a) + ")";
    case ExprKind::Add: return bin("+");
    case ExprKind::Sub: return bin("-");
    case ExprKind::Mul: return bin("*");
    case ExprKind::Mod: return bin("%");
    case ExprKind::Eq: return bin("==");
    case ExprKind::Ne: return bin("!=");
    case ExprKind::Lt: return bin("<");
    case ExprKind::Le: return bin("<=");
    case ExprKind::Gt: return bin(">");
    case ExprKind::Ge: return bin(">=");
    case ExprKind::And: return bin("&&");
    case ExprKind::Or: return bin("||");
    case ExprKind::Not: return "(!" + expr_to_string(*e.a) + ")";
    case ExprKind::Iverson: return "[" + expr_to_string(*e.a) + "]";
    case ExprKind::OneMinus: return "(1 - " + expr_to_string(*e.a) + ")";
  }
  return "?";
}

}  // namespace wrcl
