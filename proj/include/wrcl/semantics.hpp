#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#include "wrcl/elaborate.hpp"
#include "wrcl/expr.hpp"
#include "wrcl/matrix.hpp"
#include "wrcl/program.hpp"
#include "wrcl/quantity.hpp"
#include "wrcl/semiring.hpp"
#include "wrcl/state.hpp"

namespace wrcl {

/// Engine-wide evaluation policy. Idempotent semirings iterate loops to
/// exact stabilization; prob iterates until the max-entry delta drops
/// below epsilon. Assignments leaving the domain raise DomainOverflow in
/// strict mode and saturate at the domain edge in clamp mode.
struct FixpointConfig {
  std::uint64_t max_iters = 10000;
  double epsilon = 1e-12;
  bool clamp_overflow = false;
};

/// Per-run metadata: loop iteration counts and, for prob loops, an upper
/// bound on the weight mass not yet drained when iteration stopped.
struct FixpointStats {
  std::uint64_t loop_iterations = 0;
  double truncation_bound = 0.0;

  void absorb_loop(std::uint64_t iters, double bound) {
    loop_iterations += iters;
    truncation_bound = std::max(truncation_bound, bound);
  }
};

namespace detail {

inline std::int64_t assigned_value(const StateSpace& space, const Expr& rhs,
                                   const State& st, const std::string& var_name,
                                   const FixpointConfig& cfg) {
  std::int64_t v = eval_arith(rhs, st);
  if (v < 0 || v >= space.domain_size()) {
    if (!cfg.clamp_overflow) throw DomainOverflowError(var_name, v, space.domain_size());
    v = std::clamp<std::int64_t>(v, 0, space.domain_size() - 1);
  }
  return v;
}

/// sup over states of a prob weight expression; drives the geometric
/// truncation bound of prob loops.
inline double sup_weight(const ProbSemiring& sr, const StateSpace& space, const Expr& e) {
  double q = 0.0;
  for (std::uint64_t id = 0; id < space.size(); ++id)
    q = std::max(q, eval_weight(sr, e, space.decode(id)));
  return q;
}

}  // namespace detail

template <Semiring S>
WeightMatrix<S> denote(const S& sr, const StateSpace& space, const Stmt& prog,
                       const FixpointConfig& cfg = {}, FixpointStats* stats = nullptr);

/// One unrolling of the loop characteristic function:
///   Phi(X)(s,t) = e(s) * (sum_i C(s,i) * X(i,t)) + e'(s) * [s = t].
template <Semiring S>
WeightMatrix<S> loop_step(const S& sr, const StateSpace& space,
                          const WeightMatrix<S>& body, const Quantity<S>& cont_w,
                          const Quantity<S>& exit_w, const WeightMatrix<S>& x) {
  std::size_t n = space.size();
  WeightMatrix<S> bx = mat_mul(sr, body, x);
  WeightMatrix<S> out(sr, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto v = sr.mul(cont_w[i], bx.at(i, j));
      if (i == j) v = sr.add(v, sr.mul(exit_w[i], sr.one()));
      out.at(i, j) = v;
    }
  return out;
}

template <Semiring S>
WeightMatrix<S> denote(const S& sr, const StateSpace& space, const Stmt& prog,
                       const FixpointConfig& cfg, FixpointStats* stats) {
  std::size_t n = space.size();
  switch (prog.kind) {
    case StmtKind::Assign: {
      WeightMatrix<S> m(sr, n);
      for (std::uint64_t id = 0; id < n; ++id) {
        State st = space.decode(id);
        std::int64_t v = detail::assigned_value(space, *prog.expr, st, prog.var_name, cfg);
        State tgt = st;
        tgt[static_cast<std::size_t>(prog.var)] = v;
        m.at(id, space.encode(tgt)) = sr.one();
      }
      return m;
    }
    case StmtKind::NondetAssign: {
      WeightMatrix<S> m(sr, n);
      for (std::uint64_t id = 0; id < n; ++id) {
        State st = space.decode(id);
        for (std::int64_t a = 0; a < space.domain_size(); ++a) {
          State tgt = st;
          tgt[static_cast<std::size_t>(prog.var)] = a;
          std::uint64_t col = space.encode(tgt);
          m.at(id, col) = sr.add(m.at(id, col), sr.one());
        }
      }
      return m;
    }
    case StmtKind::Weight: {
      WeightMatrix<S> m(sr, n);
      for (std::uint64_t id = 0; id < n; ++id)
        m.at(id, id) = eval_weight(sr, *prog.expr, space.decode(id));
      return m;
    }
    case StmtKind::Seq:
      return mat_mul(sr, denote(sr, space, *prog.a, cfg, stats),
                     denote(sr, space, *prog.b, cfg, stats));
    case StmtKind::Choice:
      return mat_add(sr, denote(sr, space, *prog.a, cfg, stats),
                     denote(sr, space, *prog.b, cfg, stats));
    case StmtKind::Loop: {
      WeightMatrix<S> body = denote(sr, space, *prog.a, cfg, stats);
      Quantity<S> cont_w = weight_vector(sr, space, *prog.expr);
      Quantity<S> exit_w = weight_vector(sr, space, *prog.expr2);
      WeightMatrix<S> x(sr, n);  // all-zero start of the Kleene chain
      std::uint64_t iters = 0;
      for (;;) {
        if (iters >= cfg.max_iters) throw FixpointBudgetExceededError(cfg.max_iters);
        WeightMatrix<S> nx = loop_step(sr, space, body, cont_w, exit_w, x);
        ++iters;
        bool converged;
        if constexpr (S::is_idempotent) {
          converged = mat_equal(sr, nx, x);
        } else {
          converged = mat_max_delta(nx, x) < cfg.epsilon;
        }
        x = std::move(nx);
        if (converged) break;
      }
      if (stats) {
        double bound = 0.0;
        if constexpr (std::is_same_v<S, ProbSemiring>) {
          double q = detail::sup_weight(sr, space, *prog.expr);
          bound = q < 1.0 ? std::pow(q, static_cast<double>(iters)) : 1.0;
        }
        stats->absorb_loop(iters, bound);
      }
      return x;
    }
    default:
      throw TypeMismatchError("denote expects an elaborated (core) program");
  }
}

}  // namespace wrcl
