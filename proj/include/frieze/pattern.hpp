// pattern.hpp
//
// Frieze patterns over an exact rational or binary64 scalar.
//
// Conventions (used by every module in this library):
//   * indices are 0-based; a pattern of period n has width w = n - 3;
//   * entry(i, d) is the entry v_{i,i+d} in the classical labeling, where
//     d = j - i is the diagonal span, 0 <= d <= n;
//   * row k of the pattern (k = 1..w) is the sequence entry(i, k+1) over i;
//   * the first row a with a[i] = entry(i-1, 2) is the construction input,
//     so entry(i, 2) = a[(i+1) mod n].
//
// The borders are entry(i,0) = 0, entry(i,1) = 1, entry(i,n-1) = 1,
// entry(i,n) = 0, every elementary diamond satisfies
//   entry(i,d) entry(i+1,d) - entry(i,d+1) entry(i+1,d-1) = 1,
// interior entries (2 <= d <= n-2) are strictly positive, and the glide
// symmetry entry(i,d) = entry((i+d) mod n, n-d) holds throughout.
//
// Construction propagates the diamond rule row by row and cross-checks the
// closure with the monodromy product of the transfer matrices
// M_i = [[a_i, -1], [1, 0]], which must equal -Identity.
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "frieze/algebra.hpp"
#include "frieze/continuant.hpp"
#include "frieze/cyclic.hpp"
#include "frieze/errors.hpp"
#include "frieze/rational.hpp"

namespace frieze {

namespace detail {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline int imod(long i, int n) {
  const long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

template <class Scalar>
std::string scalar_to_string(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return to_string(v);
  } else {
    return std::to_string(v);
  }
}

}  // namespace detail

template <class Scalar>
Mat2<Scalar> transfer_matrix(const Scalar& a) {
  return Mat2<Scalar>{a, Scalar(-1), Scalar(1), Scalar(0)};
}

// Ordered product M(a[n-1]) * ... * M(a[0]); equals -Identity exactly when
// the first row closes into a frieze.
template <class Scalar>
Mat2<Scalar> monodromy(std::span<const Scalar> first_row) {
  Mat2<Scalar> p = Mat2<Scalar>::identity();
  for (const Scalar& a : first_row) p = transfer_matrix(a) * p;
  return p;
}

template <class Scalar>
class FriezePattern {
  static_assert(std::is_same_v<Scalar, Rational> || std::is_same_v<Scalar, double>);

 public:
  static constexpr bool is_exact = std::is_same_v<Scalar, Rational>;

  // Builds the unique frieze with the given first row, or throws:
  //   DivisionByZero    an interior entry hit zero during propagation,
  //   NonClosing        the border rows do not come back to 1s and 0s
  //                     (the monodromy product is attached),
  //   NonPositiveEntry  the pattern closes but an interior entry is <= 0.
  // For the floating scalar, closure and positivity are judged relative to
  // each row's max magnitude with the given threshold.
  static FriezePattern build_from_first_row(std::span<const Scalar> first_row,
                                            double zero_threshold = kDefaultZeroThreshold) {
    const int n = static_cast<int>(first_row.size());
    if (n < 4) throw IndexOutOfRange("period must be at least 4, got " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
      if (!positive(first_row[i], 0.0))
        throw NonPositiveEntry("first-row entry " + std::to_string(i) + " is not positive");
    }

    FriezePattern f;
    f.n_ = n;
    f.first_row_.assign(first_row.begin(), first_row.end());
    f.cells_.assign(static_cast<std::size_t>(n) * (n + 1), Scalar(0));
    for (int i = 0; i < n; ++i) {
      f.cell(i, 1) = Scalar(1);
      f.cell(i, 2) = first_row[(i + 1) % n];
    }
    // Row d+1 from rows d and d-1 via the diamond rule.
    for (int d = 2; d <= n - 2; ++d) {
      for (int i = 0; i < n; ++i) {
        const Scalar& denom = f.cell((i + 1) % n, d - 1);
        if (is_zero_divisor(denom))
          throw DivisionByZero("propagation divides by zero entry at (i=" +
                               std::to_string((i + 1) % n) + ", d=" + std::to_string(d - 1) + ")");
        f.cell(i, d + 1) = (f.cell(i, d) * f.cell((i + 1) % n, d) - Scalar(1)) / denom;
      }
    }

    // Closure: the computed row at span n-1 must be the row of 1s.
    f.closure_error_ = 0.0;
    bool closed = true;
    double closure_tol = 0.0;
    if constexpr (!is_exact) closure_tol = closure_tolerance(f, zero_threshold);
    for (int i = 0; i < n; ++i) {
      if constexpr (is_exact) {
        if (f.cell(i, n - 1) != Scalar(1)) closed = false;
      } else {
        const double dev = std::abs(f.cell(i, n - 1) - 1.0);
        f.closure_error_ = std::max(f.closure_error_, dev);
        if (dev > closure_tol) closed = false;
      }
    }
    const Mat2<Scalar> mono = monodromy<Scalar>(f.first_row_);
    const bool mono_ok = monodromy_is_minus_identity(mono, zero_threshold);
    if (closed != mono_ok)
      throw InternalError("propagation and monodromy closure tests disagree");
    if (!closed) {
      throw NonClosing("first row does not close into a frieze (monodromy != -Identity)",
                       detail::scalar_to_string(mono.a), detail::scalar_to_string(mono.b),
                       detail::scalar_to_string(mono.c), detail::scalar_to_string(mono.d));
    }
    for (int i = 0; i < n; ++i) f.cell(i, n) = Scalar(0);

    // Interior positivity. The floating cutoff sits at roundoff scale, not
    // at the sign-counting threshold: one row of a legitimate frieze can
    // span many orders of magnitude, and its small entries are data.
    for (int d = 2; d <= n - 2; ++d) {
      double cutoff = 0.0;
      if constexpr (!is_exact) {
        double row_max = 0.0;
        for (int i = 0; i < n; ++i) row_max = std::max(row_max, std::abs(f.cell(i, d)));
        cutoff = 1e3 * std::numeric_limits<double>::epsilon() * row_max;
      }
      for (int i = 0; i < n; ++i) {
        if (!positive(f.cell(i, d), cutoff))
          throw NonPositiveEntry("interior entry at (i=" + std::to_string(i) +
                                 ", d=" + std::to_string(d) + ") is not positive: " +
                                 detail::scalar_to_string(f.cell(i, d)));
      }
    }
    return f;
  }

  static FriezePattern build_from_first_row(std::initializer_list<Scalar> first_row,
                                            double zero_threshold = kDefaultZeroThreshold) {
    return build_from_first_row(std::span<const Scalar>(first_row.begin(), first_row.size()),
                                zero_threshold);
  }

  // Wraps a full table of entries (size n*(n+1), layout i*(n+1)+d) produced
  // elsewhere (e.g. from a projective polygon). Only shape is checked here;
  // run validate() for the frieze axioms.
  static FriezePattern from_entries(int n, std::vector<Scalar> cells) {
    if (n < 4 || cells.size() != static_cast<std::size_t>(n) * (n + 1))
      throw IndexOutOfRange("from_entries: bad table shape");
    FriezePattern f;
    f.n_ = n;
    f.cells_ = std::move(cells);
    f.first_row_.resize(n);
    for (int i = 0; i < n; ++i) f.first_row_[i] = f.cell(detail::imod(i - 1, n), 2);
    if constexpr (!is_exact) {
      for (int i = 0; i < n; ++i)
        f.closure_error_ = std::max({f.closure_error_, std::abs(f.cell(i, n - 1) - 1.0),
                                     std::abs(f.cell(i, n))});
    }
    return f;
  }

  int period() const { return n_; }
  int width() const { return n_ - 3; }

  // v_{i,i+d}; i is reduced modulo the period, d must lie in [0, n].
  const Scalar& entry(long i, int d) const {
    if (d < 0 || d > n_)
      throw IndexOutOfRange("span " + std::to_string(d) + " outside [0, " + std::to_string(n_) + "]");
    return cells_[static_cast<std::size_t>(detail::imod(i, n_)) * (n_ + 1) + d];
  }

  const std::vector<Scalar>& first_row() const { return first_row_; }

  // Row k = 1..width as (entry(i, k+1)) for i = 0..n-1.
  std::vector<Scalar> row(int k) const {
    if (k < 1 || k > width())
      throw IndexOutOfRange("row " + std::to_string(k) + " outside [1, width]");
    std::vector<Scalar> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = entry(i, k + 1);
    return out;
  }

  // Row k phased as it appears in the classical offset triangular layout
  // (rows k and k+2 left-aligned with each other, odd/even rows offset a
  // half step).
  std::vector<Scalar> display_row(int k) const {
    std::vector<Scalar> out = row(k);
    const int shift = (k + 1) / 2;
    std::vector<Scalar> phased(n_);
    for (int j = 0; j < n_; ++j) phased[j] = out[detail::imod(j - shift, n_)];
    return phased;
  }

  // Copy with one entry overwritten; exists so validation-failure paths can
  // be exercised without mutating shared patterns.
  FriezePattern replace_entry(long i, int d, Scalar v) const {
    FriezePattern f = *this;
    f.cells_[static_cast<std::size_t>(detail::imod(i, n_)) * (n_ + 1) + d] = std::move(v);
    return f;
  }

  // Max deviation of the computed border rows from 1s/0s (floating builds;
  // exact builds close exactly or throw).
  double closure_error() const { return closure_error_; }

  friend bool operator==(const FriezePattern& f, const FriezePattern& g) {
    return f.n_ == g.n_ && f.cells_ == g.cells_;
  }

 private:
  FriezePattern() = default;

  Scalar& cell(int i, int d) { return cells_[static_cast<std::size_t>(i) * (n_ + 1) + d]; }
  const Scalar& cell(int i, int d) const {
    return cells_[static_cast<std::size_t>(i) * (n_ + 1) + d];
  }

  static bool positive(const Scalar& v, double cutoff) {
    if constexpr (is_exact) {
      return v.sign() > 0;
    } else {
      return v > cutoff;
    }
  }

  static bool is_zero_divisor(const Scalar& v) {
    if constexpr (is_exact) {
      return v.is_zero();
    } else {
      return std::abs(v) < 1e-300;
    }
  }

  static double closure_tolerance(const FriezePattern& f, double zero_threshold) {
    double scale = 1.0;
    for (int d = 2; d <= f.n_ - 2; ++d)
      for (int i = 0; i < f.n_; ++i) scale = std::max(scale, std::abs(f.cell(i, d)));
    return zero_threshold * scale;
  }

  static bool monodromy_is_minus_identity(const Mat2<Scalar>& m, double zero_threshold) {
    if constexpr (is_exact) {
      return m == Mat2<Scalar>{Scalar(-1), Scalar(0), Scalar(0), Scalar(-1)};
    } else {
      const double tol = zero_threshold * 1e3;  // transfer products amplify roundoff
      return std::abs(m.a + 1.0) < tol && std::abs(m.b) < tol && std::abs(m.c) < tol &&
             std::abs(m.d + 1.0) < tol;
    }
  }

  int n_ = 0;
  std::vector<Scalar> cells_;
  std::vector<Scalar> first_row_;
  double closure_error_ = 0.0;
};

using FriezeQ = FriezePattern<Rational>;
using FriezeD = FriezePattern<double>;

inline FriezeD to_floating(const FriezeQ& f) {
  const int n = f.period();
  std::vector<double> cells(static_cast<std::size_t>(n) * (n + 1));
  for (int i = 0; i < n; ++i)
    for (int d = 0; d <= n; ++d) cells[static_cast<std::size_t>(i) * (n + 1) + d] = to_double(f.entry(i, d));
  return FriezeD::from_entries(n, std::move(cells));
}

// The constant frieze with a_i = 2 cos(pi/n); row k holds the Chebyshev
// value U_k(cos pi/n) = sin((k+1)pi/n) / sin(pi/n). Built by propagation so
// the border closure genuinely tests the recurrence.
inline FriezeD chebyshev_frieze(int n) {
  std::vector<double> a(n, 2.0 * std::cos(detail::kPi / n));
  return FriezeD::build_from_first_row(a);
}

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue {
  std::string category;  // "border", "diamond", "positivity", "glide", "monodromy"
  long i = 0;
  int d = 0;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;

  void add(std::string category, long i, int d, std::string message) {
    ok = false;
    if (issues.size() < 64) issues.push_back({std::move(category), i, d, std::move(message)});
  }
};

// Checks border rows, every elementary diamond, interior positivity, glide
// symmetry, and the monodromy product. Floating patterns are judged with
// the given relative tolerance.
template <class Scalar>
ValidationReport validate(const FriezePattern<Scalar>& f,
                          double tol = kDefaultZeroThreshold) {
  constexpr bool exact = FriezePattern<Scalar>::is_exact;
  const int n = f.period();
  ValidationReport report;

  double scale = 1.0;
  if constexpr (!exact) {
    for (int i = 0; i < n; ++i)
      for (int d = 0; d <= n; ++d) scale = std::max(scale, std::abs(f.entry(i, d)));
  }
  auto close_to = [&](const Scalar& v, double target) {
    if constexpr (exact) {
      return v == Rational(Integer(static_cast<long long>(target)));
    } else {
      return std::abs(v - target) <= tol * scale;
    }
  };

  for (int i = 0; i < n; ++i) {
    if (!close_to(f.entry(i, 0), 0.0)) report.add("border", i, 0, "entry(i,0) != 0");
    if (!close_to(f.entry(i, 1), 1.0)) report.add("border", i, 1, "entry(i,1) != 1");
    if (!close_to(f.entry(i, n - 1), 1.0)) report.add("border", i, n - 1, "entry(i,n-1) != 1");
    if (!close_to(f.entry(i, n), 0.0)) report.add("border", i, n, "entry(i,n) != 0");
  }

  for (int d = 1; d <= n - 1; ++d) {
    for (int i = 0; i < n; ++i) {
      const Scalar lhs =
          f.entry(i, d) * f.entry(i + 1, d) - f.entry(i, d + 1) * f.entry(i + 1, d - 1);
      bool holds;
      if constexpr (exact) {
        holds = (lhs == Scalar(1));
      } else {
        const double mag =
            1.0 + std::abs(f.entry(i, d) * f.entry(i + 1, d)) +
            std::abs(f.entry(i, d + 1) * f.entry(i + 1, d - 1));
        holds = std::abs(lhs - 1.0) <= tol * mag;
      }
      if (!holds)
        report.add("diamond", i, d,
                   "diamond rule fails at (i=" + std::to_string(i) + ", d=" + std::to_string(d) +
                       "): EW-NS = " + detail::scalar_to_string(lhs));
    }
  }

  // Strict positivity as stored: a floating entry far below its row max is
  // still data, and entries of a lift are products of positive factors, so
  // no cutoff is applied here (the propagation builder, whose arithmetic
  // genuinely cancels, keeps its own roundoff-scale cutoff).
  for (int d = 2; d <= n - 2; ++d) {
    for (int i = 0; i < n; ++i) {
      bool pos;
      if constexpr (exact) {
        pos = f.entry(i, d).sign() > 0;
      } else {
        pos = f.entry(i, d) > 0.0;
      }
      if (!pos)
        report.add("positivity", i, d,
                   "interior entry not positive: " + detail::scalar_to_string(f.entry(i, d)));
    }
  }

  for (int d = 0; d <= n; ++d) {
    for (int i = 0; i < n; ++i) {
      const Scalar& lhs = f.entry(i, d);
      const Scalar& rhs = f.entry(i + d, n - d);
      bool equal;
      if constexpr (exact) {
        equal = (lhs == rhs);
      } else {
        // Same scale-awareness as the diamond check: both sides may be tiny
        // values computed from large intermediates.
        equal = std::abs(lhs - rhs) <= tol * (scale + std::abs(lhs));
      }
      if (!equal) report.add("glide", i, d, "glide symmetry fails");
    }
  }

  {
    const Mat2<Scalar> mono = monodromy<Scalar>(f.first_row());
    bool ok;
    if constexpr (exact) {
      ok = mono == Mat2<Scalar>{Scalar(-1), Scalar(0), Scalar(0), Scalar(-1)};
    } else {
      const double mtol = tol * 1e3 * scale;
      ok = std::abs(mono.a + 1.0) < mtol && std::abs(mono.b) < mtol &&
           std::abs(mono.c) < mtol && std::abs(mono.d + 1.0) < mtol;
    }
    if (!ok) report.add("monodromy", 0, 0, "monodromy product != -Identity");
  }

  return report;
}

// ---------------------------------------------------------------------------
// Floating -> exact

// Nearest exact-rational frieze: the first w = n-3 first-row entries are
// replaced by continued-fraction approximations within tol, and the last
// three entries are recovered exactly from the closure condition
// M(z) M(y) M(x) = -(M(a~_{w-1}) ... M(a~_0))^{-1}, which has the unique
// rational solution y = -N.d, x = (N.c + 1)/y, z = (1 - N.b)/y.
inline FriezeQ rationalize_pattern(const FriezeD& f, double tol = 1e-12) {
  const int n = f.period();
  const int w = n - 3;
  std::vector<Rational> a(n);
  for (int i = 0; i < w; ++i) a[i] = rationalize(f.first_row()[i], tol);
  Mat2<Rational> partial = Mat2<Rational>::identity();
  for (int i = 0; i < w; ++i) partial = transfer_matrix(a[i]) * partial;
  Mat2<Rational> target = partial.inverse_unimodular();
  target = Mat2<Rational>{-target.a, -target.b, -target.c, -target.d};
  const Rational y = -target.d;
  if (y.is_zero())
    throw NonClosing("rationalized row admits no positive closure", to_string(target.a),
                     to_string(target.b), to_string(target.c), to_string(target.d));
  a[w] = (target.c + Rational(1)) / y;
  a[w + 1] = y;
  a[w + 2] = (Rational(1) - target.b) / y;
  return FriezeQ::build_from_first_row(a);
}

}  // namespace frieze
