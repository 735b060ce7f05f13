#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wrcl/errors.hpp"

namespace wrcl {

/// A program state: one value in {0,...,D-1} per declared variable,
/// stored in declaration order.
using State = std::vector<std::int64_t>;

/// Finite set of variables, each ranging over {0,...,domain_size-1}.
/// State ids are the mixed-radix encoding with the first variable most
/// significant, so enumeration order is stable across runs.
class StateSpace {
public:
  static constexpr std::uint64_t kDefaultCap = 1ull << 20;

  StateSpace(std::vector<std::string> vars, std::int64_t domain_size,
             std::uint64_t cap = kDefaultCap)
      : vars_(std::move(vars)), domain_(domain_size) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (n > cap / static_cast<std::uint64_t>(domain_)) throw StateSpaceTooLargeError(0, cap);
      n *= static_cast<std::uint64_t>(domain_);
    }
    if (n > cap) throw StateSpaceTooLargeError(n, cap);
    size_ = n;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  std::int64_t domain_size() const { return domain_; }
  std::uint64_t size() const { return size_; }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  std::uint64_t encode(const State& s) const {
    std::uint64_t id = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      id = id * static_cast<std::uint64_t>(domain_) + static_cast<std::uint64_t>(s[i]);
    return id;
  }

  State decode(std::uint64_t id) const {
    State s(vars_.size());
    for (std::size_t i = vars_.size(); i-- > 0;) {
      s[i] = static_cast<std::int64_t>(id % static_cast<std::uint64_t>(domain_));
      id /= static_cast<std::uint64_t>(domain_);
    }
    return s;
  }

  /// All states in id order.
  std::vector<State> enumerate() const {
    std::vector<State> out;
    out.reserve(size_);
    for (std::uint64_t id = 0; id < size_; ++id) out.push_back(decode(id));
    return out;
  }

  /// New state with variable var set to v; v must be in the domain.
  State update(const State& s, int var, std::int64_t v) const {
    if (v < 0 || v >= domain_) throw DomainOverflowError(vars_[var], v, domain_);
    State t = s;
    t[var] = v;
    return t;
  }

  std::string to_string(const State& s) const {
    std::string out = "(";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i) out += ", ";
      out += vars_[i] + "=" + std::to_string(s[i]);
    }
    return out + ")";
  }

private:
  std::vector<std::string> vars_;
  std::int64_t domain_;
  std::uint64_t size_;
};

}  // namespace wrcl
