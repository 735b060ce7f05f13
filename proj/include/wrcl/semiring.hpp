#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wrcl/errors.hpp"

namespace wrcl {

/// A weight algebra <U, +, *, 0, 1> with the natural order u <= v iff
/// exists w with u + w = v. Addition may be partial; multiplication is
/// total. Instances are small value types carried by const reference
/// through the engine.
template <typename S>
concept Semiring = requires(const S s, const typename S::value_type& a,
                            const typename S::value_type& b) {
  typename S::value_type;
  { S::is_partial } -> std::convertible_to<bool>;
  { S::is_idempotent } -> std::convertible_to<bool>;
  { s.name() } -> std::convertible_to<std::string>;
  { s.zero() } -> std::convertible_to<typename S::value_type>;
  { s.one() } -> std::convertible_to<typename S::value_type>;
  { s.try_add(a, b) } -> std::convertible_to<std::optional<typename S::value_type>>;
  { s.add(a, b) } -> std::convertible_to<typename S::value_type>;
  { s.mul(a, b) } -> std::convertible_to<typename S::value_type>;
  { s.leq(a, b) } -> std::convertible_to<bool>;
  { s.eq(a, b) } -> std::convertible_to<bool>;
  { s.to_string(a) } -> std::convertible_to<std::string>;
};

/// Fold of add over a finite sequence, left to right. Instances with a
/// numerically delicate addition override this (see ProbSemiring).
template <typename S>
typename S::value_type big_add(const S& s,
                               const std::vector<typename S::value_type>& xs) {
  auto acc = s.zero();
  for (const auto& x : xs) acc = s.add(acc, x);
  return acc;
}

// ---------------------------------------------------------------------------
// Bool = <{0,1}, or, and, 0, 1>
// ---------------------------------------------------------------------------

class BoolSemiring {
public:
  using value_type = std::uint8_t;
  static constexpr bool is_partial = false;
  static constexpr bool is_idempotent = true;
  static constexpr bool has_top = true;

  std::string name() const { return "bool"; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type top() const { return 1; }

  std::optional<value_type> try_add(value_type a, value_type b) const {
    return static_cast<value_type>(a | b);
  }
  value_type add(value_type a, value_type b) const { return static_cast<value_type>(a | b); }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>(a & b); }
  bool leq(value_type a, value_type b) const { return a <= b; }
  bool eq(value_type a, value_type b) const { return a == b; }

  std::optional<value_type> from_number(double x) const {
    if (x == 0.0) return value_type{0};
    if (x == 1.0) return value_type{1};
    return std::nullopt;
  }
  std::optional<double> to_real(value_type v) const { return static_cast<double>(v); }

  std::string to_string(value_type v) const { return v ? "1" : "0"; }
};

// ---------------------------------------------------------------------------
// Prob = <[0,1], +, *, 0, 1>, x+y undefined when x+y > 1
// ---------------------------------------------------------------------------

class ProbSemiring {
public:
  using value_type = double;
  static constexpr bool is_partial = true;
  static constexpr bool is_idempotent = false;
  static constexpr bool has_top = true;

  explicit ProbSemiring(double tolerance = 1e-9) : tol_(tolerance) {}

  /// Internal variant whose addition is total (values live in [0,+inf)).
  /// Loop fixpoint iterates are taken in this completion; the final result
  /// is validated against [0,1] by the caller.
  ProbSemiring completed() const {
    ProbSemiring s(tol_);
    s.completed_ = true;
    return s;
  }
  bool is_completed() const { return completed_; }

  std::string name() const { return "prob"; }
  double tolerance() const { return tol_; }
  value_type zero() const { return 0.0; }
  value_type one() const { return 1.0; }
  value_type top() const { return 1.0; }

  std::optional<value_type> try_add(value_type a, value_type b) const {
    double r = a + b;
    if (completed_) return r;
    if (r > 1.0 + tol_) return std::nullopt;
    return std::min(r, 1.0);
  }
  value_type add(value_type a, value_type b) const {
    auto r = try_add(a, b);
    if (!r) throw AdditionUndefinedError(to_string(a), to_string(b), "prob");
    return *r;
  }
  value_type mul(value_type a, value_type b) const { return a * b; }
  bool leq(value_type a, value_type b) const { return a <= b + tol_; }
  bool eq(value_type a, value_type b) const { return std::fabs(a - b) <= tol_; }

  std::optional<value_type> from_number(double x) const {
    if (x < -tol_ || x > 1.0 + tol_) return std::nullopt;
    return std::clamp(x, 0.0, 1.0);
  }
  std::optional<double> to_real(value_type v) const { return v; }

  std::string to_string(value_type v) const {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
  }

private:
  double tol_;
  bool completed_ = false;
};

/// Compensated left-to-right summation; deterministic and accurate for
/// long chains of loop iterates.
inline ProbSemiring::value_type big_add(const ProbSemiring& s,
                                        const std::vector<double>& xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  if (s.is_completed()) return sum;
  if (sum > 1.0 + s.tolerance())
    throw AdditionUndefinedError(s.to_string(sum), "0", "prob big_add");
  return std::min(sum, 1.0);
}

// ---------------------------------------------------------------------------
// Tropical = <[0,+inf], min, +, +inf, 0>
// ---------------------------------------------------------------------------

class TropicalSemiring {
public:
  using value_type = double;
  static constexpr bool is_partial = false;
  static constexpr bool is_idempotent = true;
  static constexpr bool has_top = true;

  static constexpr double inf() { return std::numeric_limits<double>::infinity(); }

  std::string name() const { return "tropical"; }
  value_type zero() const { return inf(); }
  value_type one() const { return 0.0; }
  value_type top() const { return 0.0; }  // minimal cost is the natural-order top

  std::optional<value_type> try_add(value_type a, value_type b) const {
    return std::min(a, b);
  }
  value_type add(value_type a, value_type b) const { return std::min(a, b); }
  value_type mul(value_type a, value_type b) const {
    if (std::isinf(a) || std::isinf(b)) return inf();  // saturating, avoids inf-inf
    return a + b;
  }
  // u <= v iff min(u, w) = v is solvable, i.e. v <= u numerically.
  bool leq(value_type a, value_type b) const { return a >= b; }
  bool eq(value_type a, value_type b) const {
    return a == b || (std::isinf(a) && std::isinf(b));
  }

  std::optional<value_type> from_number(double x) const {
    if (x < 0.0) return std::nullopt;
    return x;
  }
  std::optional<double> to_real(value_type v) const { return v; }

  std::string to_string(value_type v) const {
    if (std::isinf(v)) return "inf";
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// MaxMin = <R +- inf, max, min, -inf, +inf>
// ---------------------------------------------------------------------------

class MaxMinSemiring {
public:
  using value_type = double;
  static constexpr bool is_partial = false;
  static constexpr bool is_idempotent = true;
  static constexpr bool has_top = true;

  static constexpr double inf() { return std::numeric_limits<double>::infinity(); }

  std::string name() const { return "maxmin"; }
  value_type zero() const { return -inf(); }
  value_type one() const { return inf(); }
  value_type top() const { return inf(); }

  std::optional<value_type> try_add(value_type a, value_type b) const {
    return std::max(a, b);
  }
  value_type add(value_type a, value_type b) const { return std::max(a, b); }
  value_type mul(value_type a, value_type b) const { return std::min(a, b); }
  bool leq(value_type a, value_type b) const { return a <= b; }
  bool eq(value_type a, value_type b) const {
    return a == b || (std::isinf(a) && std::isinf(b) && std::signbit(a) == std::signbit(b));
  }

  std::optional<value_type> from_number(double x) const { return x; }
  std::optional<double> to_real(value_type v) const { return v; }

  std::string to_string(value_type v) const {
    if (std::isinf(v)) return std::signbit(v) ? "-inf" : "inf";
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// Lang(K) = finite languages over {a,b}, <P({a,b}^<=K), union, concat, {}, {eps}>
// Concatenations longer than K are dropped and flagged.
// ---------------------------------------------------------------------------

class LangSemiring {
public:
  using value_type = std::set<std::string>;
  static constexpr bool is_partial = false;
  static constexpr bool is_idempotent = true;
  static constexpr bool has_top = true;

  explicit LangSemiring(std::size_t max_word_length = 8) : max_len_(max_word_length) {}
  LangSemiring(const LangSemiring& o)
      : max_len_(o.max_len_), truncated_(o.truncated_.load(std::memory_order_relaxed)) {}
  LangSemiring& operator=(const LangSemiring& o) {
    max_len_ = o.max_len_;
    truncated_.store(o.truncated_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    return *this;
  }

  std::string name() const { return "lang(" + std::to_string(max_len_) + ")"; }
  std::size_t max_word_length() const { return max_len_; }

  value_type zero() const { return {}; }
  value_type one() const { return {std::string{}}; }
  value_type top() const {
    value_type all;
    std::vector<std::string> frontier{std::string{}};
    all.insert(std::string{});
    for (std::size_t len = 1; len <= max_len_; ++len) {
      std::vector<std::string> next;
      for (const auto& w : frontier)
        for (char c : {'a', 'b'}) {
          next.push_back(w + c);
          all.insert(next.back());
        }
      frontier = std::move(next);
    }
    return all;
  }

  std::optional<value_type> try_add(const value_type& a, const value_type& b) const {
    value_type r = a;
    r.insert(b.begin(), b.end());
    return r;
  }
  value_type add(const value_type& a, const value_type& b) const { return *try_add(a, b); }
  value_type mul(const value_type& a, const value_type& b) const {
    value_type r;
    for (const auto& u : a)
      for (const auto& v : b) {
        if (u.size() + v.size() > max_len_) {
          truncated_.store(true, std::memory_order_relaxed);
          continue;
        }
        r.insert(u + v);
      }
    return r;
  }
  bool leq(const value_type& a, const value_type& b) const {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }
  bool eq(const value_type& a, const value_type& b) const { return a == b; }

  /// Concatenation beyond the length cutoff happened at some point since
  /// construction (monotone flag).
  bool truncation_occurred() const { return truncated_.load(std::memory_order_relaxed); }
  void clear_truncation_flag() const { truncated_.store(false, std::memory_order_relaxed); }

  std::optional<value_type> from_number(double) const { return std::nullopt; }
  std::optional<double> to_real(const value_type&) const { return std::nullopt; }

  std::string to_string(const value_type& v) const {
    std::string out = "{";
    bool first = true;
    for (const auto& w : v) {
      if (!first) out += ", ";
      out += w.empty() ? "eps" : w;
      first = false;
    }
    out += "}";
    return out;
  }

private:
  std::size_t max_len_;
  mutable std::atomic<bool> truncated_{false};
};

static_assert(Semiring<BoolSemiring>);
static_assert(Semiring<ProbSemiring>);
static_assert(Semiring<TropicalSemiring>);
static_assert(Semiring<MaxMinSemiring>);
static_assert(Semiring<LangSemiring>);

}  // namespace wrcl
