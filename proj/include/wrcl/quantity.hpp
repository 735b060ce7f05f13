#pragma once

#include <cstdint>
#include <vector>

#include "wrcl/expr.hpp"
#include "wrcl/semiring.hpp"
#include "wrcl/state.hpp"

namespace wrcl {

/// A quantity f: Sigma -> U, stored densely by state id.
template <Semiring S>
struct Quantity {
  using value_type = typename S::value_type;
  std::vector<value_type> values;

  Quantity() = default;
  Quantity(const S& sr, std::size_t n) : values(n, sr.zero()) {}

  std::size_t size() const { return values.size(); }
  value_type& operator[](std::size_t i) { return values[i]; }
  const value_type& operator[](std::size_t i) const { return values[i]; }
};

template <Semiring S>
Quantity<S> zero_quantity(const S& sr, const StateSpace& space) {
  return Quantity<S>(sr, space.size());
}

template <Semiring S>
Quantity<S> one_quantity(const S& sr, const StateSpace& space) {
  Quantity<S> q(sr, space.size());
  for (auto& v : q.values) v = sr.one();
  return q;
}

template <Semiring S>
Quantity<S> point_mass(const S& sr, const StateSpace& space, const State& st) {
  Quantity<S> q(sr, space.size());
  q[space.encode(st)] = sr.one();
  return q;
}

template <Semiring S>
Quantity<S> iverson_quantity(const S& sr, const StateSpace& space, const Expr& pred) {
  Quantity<S> q(sr, space.size());
  for (std::uint64_t id = 0; id < space.size(); ++id)
    q[id] = eval_bool(pred, space.decode(id)) ? sr.one() : sr.zero();
  return q;
}

template <Semiring S>
Quantity<S> q_add(const S& sr, const Quantity<S>& a, const Quantity<S>& b) {
  Quantity<S> out(sr, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sr.add(a[i], b[i]);
  return out;
}

/// Pointwise product f * g (order matters for noncommutative semirings).
template <Semiring S>
Quantity<S> q_mul(const S& sr, const Quantity<S>& a, const Quantity<S>& b) {
  Quantity<S> out(sr, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sr.mul(a[i], b[i]);
  return out;
}

template <Semiring S>
bool q_equal(const S& sr, const Quantity<S>& a, const Quantity<S>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!sr.eq(a[i], b[i])) return false;
  return true;
}

template <Semiring S>
bool q_leq(const S& sr, const Quantity<S>& a, const Quantity<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!sr.leq(a[i], b[i])) return false;
  return true;
}

/// States with a non-zero value (zero comparison is tolerance-aware where
/// the semiring's equality is).
template <Semiring S>
std::vector<std::uint64_t> support(const S& sr, const Quantity<S>& q) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (!sr.eq(q[i], sr.zero())) out.push_back(i);
  return out;
}

/// Per-state weight vector of an expression, evaluated once per state.
template <Semiring S>
Quantity<S> weight_vector(const S& sr, const StateSpace& space, const Expr& e) {
  Quantity<S> q(sr, space.size());
  for (std::uint64_t id = 0; id < space.size(); ++id)
    q[id] = eval_weight(sr, e, space.decode(id));
  return q;
}

}  // namespace wrcl
