// sign_analysis.hpp
//
// Row differences between friezes of equal period and the four-sign-change
// verdicts on them, plus the two cross-ratio normalizations on the
// projective line
//
//   [a,b,c,d]_1 = (d-a)(c-b) / ((d-c)(b-a))
//   [a,b,c,d]_2 = (d-b)(c-a) / ((d-c)(b-a))
//
// which differ by exactly 1 on every nondegenerate quadruple. Cross-ratios
// of consecutive point quadruples of an inscribed polygon reproduce the
// second row of its frieze.
#pragma once

#include <cmath>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "frieze/cyclic.hpp"
#include "frieze/errors.hpp"
#include "frieze/pattern.hpp"

namespace frieze {

// f and g must share the period; k may run up to the full width, though rows
// beyond floor(width/2) repeat earlier ones by the glide symmetry.
template <class Scalar>
CyclicSeq<Scalar> row_difference(const FriezePattern<Scalar>& f, const FriezePattern<Scalar>& g,
                                 int k, double zero_threshold = kDefaultZeroThreshold) {
  if (f.period() != g.period())
    throw PeriodMismatch("row_difference: periods " + std::to_string(f.period()) + " and " +
                         std::to_string(g.period()) + " differ");
  if (k < 1 || k > f.width())
    throw IndexOutOfRange("row " + std::to_string(k) + " outside [1, width]");
  std::vector<Scalar> diff(f.period());
  for (int i = 0; i < f.period(); ++i) diff[i] = f.entry(i, k + 1) - g.entry(i, k + 1);
  return CyclicSeq<Scalar>(std::move(diff), zero_threshold);
}

enum class FourSignVerdict { satisfies_four, violates, degenerate };

inline const char* to_string(FourSignVerdict v) {
  switch (v) {
    case FourSignVerdict::satisfies_four: return "satisfies_four";
    case FourSignVerdict::violates: return "violates";
    case FourSignVerdict::degenerate: return "degenerate";
  }
  return "?";
}

template <class Scalar>
struct SignChangeCheck {
  int k = 0;
  int count = 0;
  FourSignVerdict verdict = FourSignVerdict::degenerate;
  CyclicSeq<Scalar> difference;
};

// Counts the cyclic sign changes of the row-k difference. An all-zero
// difference (identical rows) is degenerate, not a violation.
template <class Scalar>
SignChangeCheck<Scalar> check_four_sign_changes(const FriezePattern<Scalar>& f,
                                                const FriezePattern<Scalar>& g, int k,
                                                double zero_threshold = kDefaultZeroThreshold) {
  SignChangeCheck<Scalar> result;
  result.k = k;
  result.difference = row_difference(f, g, k, zero_threshold);
  result.count = sign_changes(result.difference);
  if (result.difference.all_zero()) {
    result.verdict = FourSignVerdict::degenerate;
  } else {
    result.verdict =
        result.count >= 4 ? FourSignVerdict::satisfies_four : FourSignVerdict::violates;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Cross-ratios

// A point of the projective line: a scalar or the explicit point at
// infinity (never encoded as a huge value).
template <class Scalar>
struct ProjectivePoint {
  Scalar value{};
  bool at_infinity = false;

  static ProjectivePoint infinity() { return {Scalar{}, true}; }
  static ProjectivePoint finite(Scalar v) { return {std::move(v), false}; }
};

namespace detail {

// Product of the factor differences with the standard limit convention: the
// single infinite point appears in exactly one numerator factor and one
// denominator factor, whose ratio tends to +1 when the point enters both
// with the same orientation (minuend/minuend or subtrahend/subtrahend) and
// to -1 when the orientations differ; both factors are dropped and the sign
// kept.
template <class Scalar>
Scalar cross_ratio_impl(const ProjectivePoint<Scalar>& a, const ProjectivePoint<Scalar>& b,
                        const ProjectivePoint<Scalar>& c, const ProjectivePoint<Scalar>& d,
                        bool second_kind) {
  const int infinities = int(a.at_infinity) + int(b.at_infinity) + int(c.at_infinity) + int(d.at_infinity);
  if (infinities > 1)
    throw DegenerateQuadruple("cross-ratio with more than one infinite point");

  // Numerator factors: kind 1 uses (d-a)(c-b); kind 2 uses (d-b)(c-a).
  // Denominator factors: (d-c)(b-a) for both.
  struct Factor {
    const ProjectivePoint<Scalar>* lhs;
    const ProjectivePoint<Scalar>* rhs;
  };
  const Factor num[2] = {second_kind ? Factor{&d, &b} : Factor{&d, &a},
                         second_kind ? Factor{&c, &a} : Factor{&c, &b}};
  const Factor den[2] = {Factor{&d, &c}, Factor{&b, &a}};

  Scalar numerator = Scalar(1);
  Scalar denominator = Scalar(1);
  int infinite_as_minuend = 0;  // +1 per factor where the infinite point is lhs
  int infinite_factors = 0;
  auto fold = [&](const Factor& f, Scalar& accum) {
    if (f.lhs->at_infinity || f.rhs->at_infinity) {
      ++infinite_factors;
      if (f.lhs->at_infinity) ++infinite_as_minuend;
      return;
    }
    accum = accum * (f.lhs->value - f.rhs->value);
  };
  for (int t = 0; t < 2; ++t) {
    fold(num[t], numerator);
    fold(den[t], denominator);
  }
  const bool flip = infinite_factors == 2 && infinite_as_minuend == 1;

  bool zero_den;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    zero_den = denominator.is_zero();
  } else {
    zero_den = denominator == 0.0;
  }
  if (zero_den) throw DegenerateQuadruple("cross-ratio denominator vanishes");
  Scalar value = numerator / denominator;
  return flip ? Scalar(-value) : value;
}

}  // namespace detail

template <class Scalar>
Scalar cross_ratio_1(const ProjectivePoint<Scalar>& a, const ProjectivePoint<Scalar>& b,
                     const ProjectivePoint<Scalar>& c, const ProjectivePoint<Scalar>& d) {
  return detail::cross_ratio_impl(a, b, c, d, false);
}

template <class Scalar>
Scalar cross_ratio_2(const ProjectivePoint<Scalar>& a, const ProjectivePoint<Scalar>& b,
                     const ProjectivePoint<Scalar>& c, const ProjectivePoint<Scalar>& d) {
  return detail::cross_ratio_impl(a, b, c, d, true);
}

template <class Scalar>
Scalar cross_ratio_1(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  using P = ProjectivePoint<Scalar>;
  return cross_ratio_1(P::finite(a), P::finite(b), P::finite(c), P::finite(d));
}

template <class Scalar>
Scalar cross_ratio_2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  using P = ProjectivePoint<Scalar>;
  return cross_ratio_2(P::finite(a), P::finite(b), P::finite(c), P::finite(d));
}

// Second frieze row from a cyclically ordered point tuple:
// out[i] = [x_i, x_{i+1}, x_{i+2}, x_{i+3}]_1.
template <class Scalar>
CyclicSeq<Scalar> second_row_from_points(std::span<const ProjectivePoint<Scalar>> points,
                                         double zero_threshold = kDefaultZeroThreshold) {
  const std::size_t n = points.size();
  if (n < 4) throw IndexOutOfRange("need at least 4 points");
  std::vector<Scalar> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = cross_ratio_1(points[i], points[(i + 1) % n], points[(i + 2) % n],
                           points[(i + 3) % n]);
  return CyclicSeq<Scalar>(std::move(out), zero_threshold);
}

}  // namespace frieze
