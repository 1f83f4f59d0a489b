// cyclic.hpp
//
// CyclicSeq: an n-periodic sequence of exact rationals or binary64 values,
// with the cyclic sign-change count at its core. For floating sequences,
// entries whose magnitude falls below zero_threshold * max|values| are
// treated as exact zeros; for exact sequences the threshold is ignored.
//
// Sign changes are counted on the cyclic subsequence of nonzero entries:
// zeros are skipped, adjacent (cyclically) nonzero entries of opposite sign
// count one change each, and the all-zero sequence counts 0. The result is
// always even.
#pragma once

#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "frieze/rational.hpp"

namespace frieze {

inline constexpr double kDefaultZeroThreshold = 1e-9;

template <class Scalar>
class CyclicSeq {
  static_assert(std::is_same_v<Scalar, Rational> || std::is_same_v<Scalar, double>,
                "CyclicSeq supports Rational and double scalars");

 public:
  static constexpr bool is_exact = std::is_same_v<Scalar, Rational>;

  CyclicSeq() = default;

  explicit CyclicSeq(std::vector<Scalar> values, double zero_threshold = kDefaultZeroThreshold)
      : values_(std::move(values)), zero_threshold_(zero_threshold) {
    if constexpr (!is_exact) {
      double max_abs = 0.0;
      for (double v : values_) max_abs = std::max(max_abs, std::abs(v));
      cutoff_ = zero_threshold_ * max_abs;
    }
  }

  std::size_t size() const { return values_.size(); }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  double zero_threshold() const { return zero_threshold_; }

  // -1, 0, +1 after zero thresholding.
  int sign_at(std::size_t i) const {
    if constexpr (is_exact) {
      return values_[i].sign();
    } else {
      const double v = values_[i];
      if (std::abs(v) < cutoff_ || v == 0.0) return 0;
      return v > 0.0 ? 1 : -1;
    }
  }

  bool all_zero() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (sign_at(i) != 0) return false;
    return true;
  }

 private:
  std::vector<Scalar> values_;
  double zero_threshold_ = kDefaultZeroThreshold;
  double cutoff_ = 0.0;  // absolute cutoff, floating kind only
};

template <class Scalar>
int sign_changes(const CyclicSeq<Scalar>& s) {
  int count = 0;
  int first_sign = 0;
  int prev_sign = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int sgn = s.sign_at(i);
    if (sgn == 0) continue;
    if (prev_sign != 0 && sgn != prev_sign) ++count;
    if (first_sign == 0) first_sign = sgn;
    prev_sign = sgn;
  }
  if (prev_sign != 0 && first_sign != prev_sign) ++count;  // wrap-around pair
  return count;
}

}  // namespace frieze
