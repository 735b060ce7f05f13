#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wrcl/program.hpp"
#include "wrcl/quantity.hpp"
#include "wrcl/semantics.hpp"
#include "wrcl/semiring.hpp"
#include "wrcl/state.hpp"

namespace wrcl {

/// Independent reference implementation: literal path enumeration. Loops
/// are unrolled up to a bound; loop-free programs are exact. Used as the
/// ground truth in differential tests, so it must stay independent of the
/// matrix and rule-based routes.
struct OracleConfig {
  std::uint64_t unroll_bound = 32;
  std::uint64_t path_budget = 1000000;
  bool clamp_overflow = false;
};

namespace detail {

template <Semiring S>
struct PathCollector {
  const S& sr;
  const StateSpace& space;
  const OracleConfig& cfg;
  std::vector<std::pair<State, typename S::value_type>> out;
  std::uint64_t emitted = 0;

  void emit(const State& st, const typename S::value_type& w) {
    if (++emitted > cfg.path_budget) throw PathBudgetExceededError(cfg.path_budget);
    out.emplace_back(st, w);
  }

  template <typename Cont>
  void walk(const Stmt& prog, const State& st, const typename S::value_type& w,
            std::uint64_t bound, const Cont& cont) {
    if (sr.eq(w, sr.zero())) return;  // dead branch
    switch (prog.kind) {
      case StmtKind::Assign: {
        FixpointConfig fc;
        fc.clamp_overflow = cfg.clamp_overflow;
        std::int64_t v = assigned_value(space, *prog.expr, st, prog.var_name, fc);
        State t = st;
        t[static_cast<std::size_t>(prog.var)] = v;
        cont(t, w);
        return;
      }
      case StmtKind::NondetAssign: {
        for (std::int64_t a = 0; a < space.domain_size(); ++a) {
          State t = st;
          t[static_cast<std::size_t>(prog.var)] = a;
          cont(t, w);
        }
        return;
      }
      case StmtKind::Weight: {
        auto v = eval_weight(sr, *prog.expr, st);
        auto nw = sr.mul(w, v);
        if (!sr.eq(nw, sr.zero())) cont(st, nw);
        return;
      }
      case StmtKind::Seq: {
        walk(*prog.a, st, w, bound, [&](const State& mid, const typename S::value_type& mw) {
          walk(*prog.b, mid, mw, bound, cont);
        });
        return;
      }
      case StmtKind::Choice: {
        walk(*prog.a, st, w, bound, cont);
        walk(*prog.b, st, w, bound, cont);
        return;
      }
      case StmtKind::Loop: {
        // exit now with weight e', or run (weight e; body) and recurse
        auto exit_v = eval_weight(sr, *prog.expr2, st);
        auto exit_w = sr.mul(w, exit_v);
        if (!sr.eq(exit_w, sr.zero())) cont(st, exit_w);
        if (bound == 0) return;
        auto cont_v = eval_weight(sr, *prog.expr, st);
        auto cont_w = sr.mul(w, cont_v);
        if (sr.eq(cont_w, sr.zero())) return;
        walk(*prog.a, st, cont_w, bound,
             [&](const State& mid, const typename S::value_type& mw) {
               walk(prog, mid, mw, bound - 1, cont);
             });
        return;
      }
      default:
        throw TypeMismatchError("oracle expects an elaborated (core) program");
    }
  }
};

}  // namespace detail

/// All execution paths with nonzero weight from one initial state;
/// summing weights per final state reproduces [[C]](s, .) exactly for
/// loop-free programs, and up to the unroll remainder otherwise.
template <Semiring S>
std::vector<std::pair<State, typename S::value_type>> enumerate_paths(
    const S& sr, const StateSpace& space, const Stmt& prog, const State& from,
    const OracleConfig& cfg = {}) {
  detail::PathCollector<S> pc{sr, space, cfg, {}, 0};
  pc.walk(prog, from, sr.one(), cfg.unroll_bound,
          [&](const State& t, const typename S::value_type& w) { pc.emit(t, w); });
  return std::move(pc.out);
}

/// Ground-truth strongest post from path enumeration:
///   out(t) = sum_s mu(s) * (sum of path weights s -> t).
template <Semiring S>
Quantity<S> oracle_sp(const S& sr, const StateSpace& space, const Stmt& prog,
                      const Quantity<S>& mu, const OracleConfig& cfg = {}) {
  Quantity<S> out(sr, space.size());
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    if (sr.eq(mu[id], sr.zero())) continue;
    auto paths = enumerate_paths(sr, space, prog, space.decode(id), cfg);
    for (const auto& [tau, w] : paths) {
      std::uint64_t tid = space.encode(tau);
      out[tid] = sr.add(out[tid], sr.mul(mu[id], w));
    }
  }
  return out;
}

}  // namespace wrcl
