#pragma once

#include <cstdint>
#include <vector>

#include "wrcl/semiring.hpp"

namespace wrcl {

/// Dense |Sigma| x |Sigma| transition-weight matrix; row = source state,
/// column = target state.
template <Semiring S>
class WeightMatrix {
public:
  using value_type = typename S::value_type;

  WeightMatrix() : n_(0) {}
  WeightMatrix(const S& sr, std::size_t n) : n_(n), e_(n * n, sr.zero()) {}

  std::size_t size() const { return n_; }
  value_type& at(std::size_t row, std::size_t col) { return e_[row * n_ + col]; }
  const value_type& at(std::size_t row, std::size_t col) const { return e_[row * n_ + col]; }

  static WeightMatrix identity(const S& sr, std::size_t n) {
    WeightMatrix m(sr, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = sr.one();
    return m;
  }

private:
  std::size_t n_;
  std::vector<value_type> e_;
};

/// Semiring matrix product with a fixed summation order (intermediate
/// state ascending), so results are reproducible.
template <Semiring S>
WeightMatrix<S> mat_mul(const S& sr, const WeightMatrix<S>& a, const WeightMatrix<S>& b) {
  std::size_t n = a.size();
  WeightMatrix<S> out(sr, n);
  std::vector<typename S::value_type> terms;
  terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      terms.clear();
      for (std::size_t k = 0; k < n; ++k) terms.push_back(sr.mul(a.at(i, k), b.at(k, j)));
      out.at(i, j) = big_add(sr, terms);
    }
  return out;
}

template <Semiring S>
WeightMatrix<S> mat_add(const S& sr, const WeightMatrix<S>& a, const WeightMatrix<S>& b) {
  std::size_t n = a.size();
  WeightMatrix<S> out(sr, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = sr.add(a.at(i, j), b.at(i, j));
  return out;
}

template <Semiring S>
bool mat_equal(const S& sr, const WeightMatrix<S>& a, const WeightMatrix<S>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!sr.eq(a.at(i, j), b.at(i, j))) return false;
  return true;
}

/// Entrywise natural-order comparison (used by the monotone-chain checks).
template <Semiring S>
bool mat_leq(const S& sr, const WeightMatrix<S>& a, const WeightMatrix<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!sr.leq(a.at(i, j), b.at(i, j))) return false;
  return true;
}

inline double mat_max_delta(const WeightMatrix<ProbSemiring>& a,
                            const WeightMatrix<ProbSemiring>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      d = std::max(d, std::fabs(a.at(i, j) - b.at(i, j)));
  return d;
}

}  // namespace wrcl
