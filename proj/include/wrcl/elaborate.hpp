#pragma once

#include <optional>
#include <string>

#include "wrcl/expr.hpp"
#include "wrcl/program.hpp"
#include "wrcl/semiring.hpp"
#include "wrcl/state.hpp"

namespace wrcl {

/// Lowers syntactic sugar to the six core constructors:
///   skip            -> weight([true])
///   diverge         -> weight([false])
///   assume(b)       -> weight([b])
///   if b {C1} else {C2} -> (weight([b]); C1) [] (weight([!b]); C2)
///   C1 [p] C2       -> (weight(p); C1) [] (weight(1-p); C2)
///   while b { C }   -> loop { C } weight [b] exit [!b]
///   C*              -> loop { C } weight [true] exit [true]
/// Idempotent on core programs.
inline StmtPtr elaborate(const StmtPtr& s) {
  switch (s->kind) {
    case StmtKind::Assign:
    case StmtKind::NondetAssign:
      return s;
    case StmtKind::Weight:
      return s;
    case StmtKind::Seq:
      return mk_seq(elaborate(s->a), elaborate(s->b));
    case StmtKind::Choice:
      return mk_choice(elaborate(s->a), elaborate(s->b));
    case StmtKind::Loop:
      return mk_loop(elaborate(s->a), s->expr, s->expr2);
    case StmtKind::Skip:
      return mk_weight(mk_unary(ExprKind::Iverson, mk_bool(true)));
    case StmtKind::Diverge:
      return mk_weight(mk_unary(ExprKind::Iverson, mk_bool(false)));
    case StmtKind::Assume:
      return mk_weight(mk_unary(ExprKind::Iverson, s->expr));
    case StmtKind::If: {
      ExprPtr guard = s->expr;
      StmtPtr then_b = mk_seq(mk_weight(mk_unary(ExprKind::Iverson, guard)), elaborate(s->a));
      StmtPtr else_b = mk_seq(
          mk_weight(mk_unary(ExprKind::Iverson, mk_unary(ExprKind::Not, guard))),
          elaborate(s->b));
      return mk_choice(then_b, else_b);
    }
    case StmtKind::While: {
      ExprPtr guard = s->expr;
      return mk_loop(elaborate(s->a), mk_unary(ExprKind::Iverson, guard),
                     mk_unary(ExprKind::Iverson, mk_unary(ExprKind::Not, guard)));
    }
    case StmtKind::ProbChoice: {
      ExprPtr p = s->expr;
      StmtPtr left = mk_seq(mk_weight(p), elaborate(s->a));
      StmtPtr right = mk_seq(mk_weight(mk_unary(ExprKind::OneMinus, p)), elaborate(s->b));
      return mk_choice(left, right);
    }
    case StmtKind::Star: {
      ExprPtr one = mk_unary(ExprKind::Iverson, mk_bool(true));
      return mk_loop(elaborate(s->a), one, one);
    }
  }
  return s;
}

/// Leftmost weight of a sequence, if the branch is weight-guarded.
inline const Expr* leading_weight(const Stmt& s) {
  if (s.kind == StmtKind::Weight) return s.expr.get();
  if (s.kind == StmtKind::Seq) return leading_weight(*s.a);
  return nullptr;
}

/// Well-definedness for partial semirings: nondeterministic assignment and
/// unguarded choice are rejected; guarded choices and loops need their two
/// weights to have a defined sum in every state (checked exhaustively).
/// Total semirings accept everything.
template <Semiring S>
void check_well_defined(const S& sr, const StateSpace& space, const Stmt& prog) {
  if constexpr (!S::is_partial) {
    (void)sr;
    (void)space;
    (void)prog;
    return;
  } else {
    switch (prog.kind) {
      case StmtKind::Assign:
      case StmtKind::Weight:
        return;
      case StmtKind::NondetAssign:
        throw WellDefinednessError(
            "nondeterministic assignment to '" + prog.var_name +
                "' requires a total semiring",
            "");
      case StmtKind::Seq:
        check_well_defined(sr, space, *prog.a);
        check_well_defined(sr, space, *prog.b);
        return;
      case StmtKind::Choice: {
        const Expr* e1 = leading_weight(*prog.a);
        const Expr* e2 = leading_weight(*prog.b);
        if (!e1 || !e2)
          throw WellDefinednessError("unguarded choice in a partial semiring", "");
        for (std::uint64_t id = 0; id < space.size(); ++id) {
          State st = space.decode(id);
          auto v1 = eval_weight(sr, *e1, st);
          auto v2 = eval_weight(sr, *e2, st);
          if (!sr.try_add(v1, v2))
            throw WellDefinednessError(
                "choice weights " + sr.to_string(v1) + " and " + sr.to_string(v2) +
                    " have no defined sum",
                space.to_string(st));
        }
        check_well_defined(sr, space, *prog.a);
        check_well_defined(sr, space, *prog.b);
        return;
      }
      case StmtKind::Loop: {
        for (std::uint64_t id = 0; id < space.size(); ++id) {
          State st = space.decode(id);
          auto v1 = eval_weight(sr, *prog.expr, st);
          auto v2 = eval_weight(sr, *prog.expr2, st);
          if (!sr.try_add(v1, v2))
            throw WellDefinednessError(
                "loop weights " + sr.to_string(v1) + " and " + sr.to_string(v2) +
                    " have no defined sum",
                space.to_string(st));
        }
        check_well_defined(sr, space, *prog.a);
        return;
      }
      default:
        throw WellDefinednessError("program must be elaborated before checking", "");
    }
  }
}

}  // namespace wrcl
