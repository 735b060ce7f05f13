#pragma once

#include <cmath>
#include <cstdint>
#include <type_traits>

#include "wrcl/matrix.hpp"
#include "wrcl/program.hpp"
#include "wrcl/quantity.hpp"
#include "wrcl/semantics.hpp"
#include "wrcl/semiring.hpp"
#include "wrcl/state.hpp"

namespace wrcl {

namespace detail {

/// sp of a single assignment: sum over the previous values of x,
///   sp(x := e)(f)(t) = sum_a f(t[x/a]) * [t(x) = e(t[x/a])].
template <Semiring S>
Quantity<S> sp_assign(const S& sr, const StateSpace& space, const Stmt& st,
                      const Quantity<S>& f, const FixpointConfig& cfg) {
  Quantity<S> out(sr, space.size());
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    State tau = space.decode(id);
    auto acc = sr.zero();
    for (std::int64_t a = 0; a < space.domain_size(); ++a) {
      State sigma = tau;
      sigma[static_cast<std::size_t>(st.var)] = a;
      std::int64_t v = assigned_value(space, *st.expr, sigma, st.var_name, cfg);
      if (v == tau[static_cast<std::size_t>(st.var)])
        acc = sr.add(acc, f[space.encode(sigma)]);
    }
    out[id] = acc;
  }
  return out;
}

template <Semiring S>
Quantity<S> sp_nondet(const S& sr, const StateSpace& space, const Stmt& st,
                      const Quantity<S>& f) {
  Quantity<S> out(sr, space.size());
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    State tau = space.decode(id);
    auto acc = sr.zero();
    for (std::int64_t a = 0; a < space.domain_size(); ++a) {
      State sigma = tau;
      sigma[static_cast<std::size_t>(st.var)] = a;
      acc = sr.add(acc, f[space.encode(sigma)]);
    }
    out[id] = acc;
  }
  return out;
}

template <Semiring S>
Quantity<S> sp_loop(const S& sr, const S& iter_sr, const StateSpace& space,
                    const Stmt& prog, const Quantity<S>& f, const FixpointConfig& cfg,
                    FixpointStats* stats);

template <Semiring S>
Quantity<S> sp_impl(const S& sr, const StateSpace& space, const Stmt& prog,
                    const Quantity<S>& f, const FixpointConfig& cfg,
                    FixpointStats* stats) {
  switch (prog.kind) {
    case StmtKind::Assign:
      return sp_assign(sr, space, prog, f, cfg);
    case StmtKind::NondetAssign:
      return sp_nondet(sr, space, prog, f);
    case StmtKind::Weight: {
      Quantity<S> out(sr, space.size());
      for (std::uint64_t id = 0; id < space.size(); ++id)
        out[id] = sr.mul(f[id], eval_weight(sr, *prog.expr, space.decode(id)));
      return out;
    }
    case StmtKind::Seq:
      return sp_impl(sr, space, *prog.b, sp_impl(sr, space, *prog.a, f, cfg, stats), cfg,
                     stats);
    case StmtKind::Choice:
      return q_add(sr, sp_impl(sr, space, *prog.a, f, cfg, stats),
                   sp_impl(sr, space, *prog.b, f, cfg, stats));
    case StmtKind::Loop: {
      // lfp X. f + sp(C)(X * e), then * e'. Prob iterates are taken in the
      // completion [0,+inf); the caller validates the final product.
      if constexpr (std::is_same_v<S, ProbSemiring>) {
        ProbSemiring iter_sr = sr.completed();
        return sp_loop(sr, iter_sr, space, prog, f, cfg, stats);
      } else {
        return sp_loop(sr, sr, space, prog, f, cfg, stats);
      }
    }
    default:
      throw TypeMismatchError("sp expects an elaborated (core) program");
  }
}

template <Semiring S>
Quantity<S> sp_loop(const S& sr, const S& iter_sr, const StateSpace& space,
                    const Stmt& prog, const Quantity<S>& f, const FixpointConfig& cfg,
                    FixpointStats* stats) {
  Quantity<S> cont_w = weight_vector(sr, space, *prog.expr);
  Quantity<S> exit_w = weight_vector(sr, space, *prog.expr2);
  Quantity<S> x(iter_sr, space.size());
  Quantity<S> y = q_mul(iter_sr, x, exit_w);
  std::uint64_t iters = 0;
  for (;;) {
    if (iters >= cfg.max_iters) throw FixpointBudgetExceededError(cfg.max_iters);
    Quantity<S> nx = q_add(
        iter_sr, f,
        sp_impl(iter_sr, space, *prog.a, q_mul(iter_sr, x, cont_w), cfg, stats));
    ++iters;
    bool converged;
    if constexpr (S::is_idempotent) {
      converged = q_equal(iter_sr, nx, x);
      x = std::move(nx);
    } else {
      // Convergence is judged on the exit-weighted product: that is the
      // observable result, and it stays bounded even when the raw chain
      // ascends without bound (e.g. while(true) bodies).
      Quantity<S> ny = q_mul(iter_sr, nx, exit_w);
      double delta = 0.0;
      for (std::size_t i = 0; i < ny.size(); ++i)
        delta = std::max(delta, std::fabs(ny[i] - y[i]));
      converged = delta < cfg.epsilon;
      x = std::move(nx);
      y = std::move(ny);
    }
    if (converged) break;
  }
  if (stats) {
    double bound = 0.0;
    if constexpr (std::is_same_v<S, ProbSemiring>) {
      double q = 0.0;
      for (std::size_t i = 0; i < cont_w.size(); ++i) q = std::max(q, cont_w[i]);
      bound = q < 1.0 ? std::pow(q, static_cast<double>(iters)) : 1.0;
    }
    stats->absorb_loop(iters, bound);
  }
  return q_mul(iter_sr, x, exit_w);
}

}  // namespace detail

/// Strongest post, computed by the syntactic rules. Satisfies
/// sp(C)(m)(t) = sum_s m(s) * [[C]](s,t).
template <Semiring S>
Quantity<S> sp(const S& sr, const StateSpace& space, const Stmt& prog,
               const Quantity<S>& f, const FixpointConfig& cfg = {},
               FixpointStats* stats = nullptr) {
  Quantity<S> out = detail::sp_impl(sr, space, prog, f, cfg, stats);
  if constexpr (std::is_same_v<S, ProbSemiring>) {
    if (!sr.is_completed()) {
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] > 1.0 + sr.tolerance())
          throw AdditionUndefinedError(sr.to_string(out[i]), "0",
                                       "sp result at state " +
                                           space.to_string(space.decode(i)));
        out[i] = std::min(out[i], 1.0);
      }
    }
  }
  return out;
}

/// Weakest pre, computed by the syntactic rules. Satisfies
/// wp(C)(f)(s) = sum_t [[C]](s,t) * f(t).
template <Semiring S>
Quantity<S> wp(const S& sr, const StateSpace& space, const Stmt& prog,
               const Quantity<S>& f, const FixpointConfig& cfg = {},
               FixpointStats* stats = nullptr) {
  switch (prog.kind) {
    case StmtKind::Assign: {
      Quantity<S> out(sr, space.size());
      for (std::uint64_t id = 0; id < space.size(); ++id) {
        State sigma = space.decode(id);
        std::int64_t v =
            detail::assigned_value(space, *prog.expr, sigma, prog.var_name, cfg);
        State tau = sigma;
        tau[static_cast<std::size_t>(prog.var)] = v;
        out[id] = f[space.encode(tau)];
      }
      return out;
    }
    case StmtKind::NondetAssign: {
      Quantity<S> out(sr, space.size());
      for (std::uint64_t id = 0; id < space.size(); ++id) {
        State sigma = space.decode(id);
        auto acc = sr.zero();
        for (std::int64_t a = 0; a < space.domain_size(); ++a) {
          State tau = sigma;
          tau[static_cast<std::size_t>(prog.var)] = a;
          acc = sr.add(acc, f[space.encode(tau)]);
        }
        out[id] = acc;
      }
      return out;
    }
    case StmtKind::Weight: {
      Quantity<S> out(sr, space.size());
      for (std::uint64_t id = 0; id < space.size(); ++id)
        out[id] = sr.mul(eval_weight(sr, *prog.expr, space.decode(id)), f[id]);
      return out;
    }
    case StmtKind::Seq:
      return wp(sr, space, *prog.a, wp(sr, space, *prog.b, f, cfg, stats), cfg, stats);
    case StmtKind::Choice:
      return q_add(sr, wp(sr, space, *prog.a, f, cfg, stats),
                   wp(sr, space, *prog.b, f, cfg, stats));
    case StmtKind::Loop: {
      // lfp X. e' * f + e * wp(C)(X)
      Quantity<S> cont_w = weight_vector(sr, space, *prog.expr);
      Quantity<S> exit_w = weight_vector(sr, space, *prog.expr2);
      Quantity<S> base = q_mul(sr, exit_w, f);
      Quantity<S> x(sr, space.size());
      std::uint64_t iters = 0;
      for (;;) {
        if (iters >= cfg.max_iters) throw FixpointBudgetExceededError(cfg.max_iters);
        Quantity<S> nx =
            q_add(sr, base, q_mul(sr, cont_w, wp(sr, space, *prog.a, x, cfg, stats)));
        ++iters;
        bool converged;
        if constexpr (S::is_idempotent) {
          converged = q_equal(sr, nx, x);
        } else {
          double delta = 0.0;
          for (std::size_t i = 0; i < nx.size(); ++i)
            delta = std::max(delta, std::fabs(nx[i] - x[i]));
          converged = delta < cfg.epsilon;
        }
        x = std::move(nx);
        if (converged) break;
      }
      if (stats) {
        double bound = 0.0;
        if constexpr (std::is_same_v<S, ProbSemiring>) {
          double q = 0.0;
          for (std::size_t i = 0; i < cont_w.size(); ++i) q = std::max(q, cont_w[i]);
          bound = q < 1.0 ? std::pow(q, static_cast<double>(iters)) : 1.0;
        }
        stats->absorb_loop(iters, bound);
      }
      return x;
    }
    default:
      throw TypeMismatchError("wp expects an elaborated (core) program");
  }
}

/// Matrix route for sp: the differential-testing twin of the rule-based
/// transformer.
template <Semiring S>
Quantity<S> sp_via_matrix(const S& sr, const WeightMatrix<S>& m, const Quantity<S>& mu) {
  std::size_t n = m.size();
  Quantity<S> out(sr, n);
  std::vector<typename S::value_type> terms;
  terms.reserve(n);
  for (std::size_t tau = 0; tau < n; ++tau) {
    terms.clear();
    for (std::size_t sigma = 0; sigma < n; ++sigma)
      terms.push_back(sr.mul(mu[sigma], m.at(sigma, tau)));
    out[tau] = big_add(sr, terms);
  }
  return out;
}

template <Semiring S>
Quantity<S> wp_via_matrix(const S& sr, const WeightMatrix<S>& m, const Quantity<S>& f) {
  std::size_t n = m.size();
  Quantity<S> out(sr, n);
  std::vector<typename S::value_type> terms;
  terms.reserve(n);
  for (std::size_t sigma = 0; sigma < n; ++sigma) {
    terms.clear();
    for (std::size_t tau = 0; tau < n; ++tau)
      terms.push_back(sr.mul(m.at(sigma, tau), f[tau]));
    out[sigma] = big_add(sr, terms);
  }
  return out;
}

}  // namespace wrcl
