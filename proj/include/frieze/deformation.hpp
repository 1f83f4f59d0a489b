// deformation.hpp
//
// First-order deformations of the constant frieze a_i = 2 cos(pi/n),
// realized through the regular inscribed polygon
//
//   V_i = (cos(i pi/n), sin(i pi/n)) / sqrt(sin(pi/n)).
//
// A deformation W_i = V_i + eps E_i that keeps det(W_i, W_{i+1}) = 1 to
// first order is determined by the n-periodic coefficients q_i of
// E_i = q_i V_i + q_bar_i V_{i-1}; equivalently E_i = p_i V_i + p_bar_i V_{i+1}
// with
//   p_i = -q_{i+1},  p_bar_i = (q_i + q_{i+1})/c,  q_bar_i = -(q_i + q_{i+1})/c,
//   c = 2 cos(pi/n).
//
// The first-order change of row k-1 is, up to the factor 1/sin(2 pi/n),
//
//   c_i = (q_{i+k} - q_{i+1}) sin(pi(k+1)/n) - (q_{i+k+1} - q_i) sin(pi(k-1)/n),
//
// a sequence orthogonal to the discrete first harmonics (1, sin 2 pi i/n,
// cos 2 pi i/n) and therefore required to change sign at least four times
// whenever it is not identically zero. A finite-difference oracle rebuilds
// the perturbed polygon for a concrete small eps and must reproduce
// c_i / sin(2 pi/n) to first order.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "frieze/algebra.hpp"
#include "frieze/cyclic.hpp"
#include "frieze/detail/rng.hpp"
#include "frieze/errors.hpp"
#include "frieze/sign_analysis.hpp"

namespace frieze {

struct DeformationInput {
  int n = 0;
  int k = 0;
  std::vector<double> q;  // read modulo n
};

inline void validate_deformation_input(const DeformationInput& in) {
  if (in.n < 5) throw IndexOutOfRange("deformation needs n >= 5");
  if (static_cast<int>(in.q.size()) != in.n)
    throw IndexOutOfRange("q must have exactly n entries");
  if (in.k < 2 || in.k > in.n - 2)
    throw KOutOfRange("k = " + std::to_string(in.k) + " outside [2, n-2] for n = " +
                      std::to_string(in.n));
}

inline DeformationInput random_deformation_input(int n, int k, std::uint64_t seed) {
  DeformationInput in{n, k, std::vector<double>(n)};
  detail::Rng rng(seed);
  for (double& v : in.q) v = rng.gaussian();
  validate_deformation_input(in);
  return in;
}

struct DeformationCoefficients {
  std::vector<double> p, p_bar, q_bar;
  double c_const = 0.0;  // 2 cos(pi/n)
};

inline DeformationCoefficients coefficients_from_q(const DeformationInput& in) {
  if (in.n < 5) throw IndexOutOfRange("deformation needs n >= 5");
  if (static_cast<int>(in.q.size()) != in.n)
    throw IndexOutOfRange("q must have exactly n entries");
  const int n = in.n;
  DeformationCoefficients out;
  out.c_const = 2.0 * std::cos(detail::kPi / n);
  out.p.resize(n);
  out.p_bar.resize(n);
  out.q_bar.resize(n);
  for (int i = 0; i < n; ++i) {
    const double qi = in.q[i];
    const double qi1 = in.q[(i + 1) % n];
    out.p[i] = -qi1;
    out.p_bar[i] = (qi + qi1) / out.c_const;
    out.q_bar[i] = -(qi + qi1) / out.c_const;
  }
  return out;
}

struct CSequence {
  int n = 0;
  int k = 0;
  std::vector<double> c;
};

inline CSequence c_sequence(const DeformationInput& in) {
  validate_deformation_input(in);
  const int n = in.n;
  const int k = in.k;
  const double s_plus = std::sin(detail::kPi * (k + 1) / n);
  const double s_minus = std::sin(detail::kPi * (k - 1) / n);
  CSequence out{n, k, std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    out.c[i] = (in.q[(i + k) % n] - in.q[(i + 1) % n]) * s_plus -
               (in.q[(i + k + 1) % n] - in.q[i]) * s_minus;
  }
  return out;
}

struct HarmonicResiduals {
  double constant = 0.0;  // |sum c_i|
  double sine = 0.0;      // |sum c_i sin(2 pi i/n)|
  double cosine = 0.0;    // |sum c_i cos(2 pi i/n)|
  double scale = 0.0;     // n * max|c_i|, the natural comparison scale
};

inline HarmonicResiduals harmonic_orthogonality_report(const CSequence& cs) {
  HarmonicResiduals r;
  double sum = 0.0, sum_sin = 0.0, sum_cos = 0.0, max_abs = 0.0;
  for (int i = 0; i < cs.n; ++i) {
    const double angle = 2.0 * detail::kPi * i / cs.n;
    sum += cs.c[i];
    sum_sin += cs.c[i] * std::sin(angle);
    sum_cos += cs.c[i] * std::cos(angle);
    max_abs = std::max(max_abs, std::abs(cs.c[i]));
  }
  r.constant = std::abs(sum);
  r.sine = std::abs(sum_sin);
  r.cosine = std::abs(sum_cos);
  r.scale = cs.n * max_abs;
  return r;
}

struct InfinitesimalCheck {
  int count = 0;
  FourSignVerdict verdict = FourSignVerdict::degenerate;
  CSequence c;
};

// Sign-change verdict for the first-order row deformation; c == 0
// (e.g. constant q) is degenerate, every other case must reach four.
inline InfinitesimalCheck infinitesimal_check(const DeformationInput& in,
                                              double zero_threshold = kDefaultZeroThreshold) {
  InfinitesimalCheck out;
  out.c = c_sequence(in);
  CyclicSeq<double> seq(out.c.c, zero_threshold);
  out.count = sign_changes(seq);
  if (seq.all_zero()) {
    out.verdict = FourSignVerdict::degenerate;
  } else {
    out.verdict = out.count >= 4 ? FourSignVerdict::satisfies_four : FourSignVerdict::violates;
  }
  return out;
}

// Builds the perturbed polygon W_i = V_i + eps E_i for a concrete eps,
// rescales vertices so consecutive determinants are exactly 1 (closed form
// for odd n; for even n the single wrap edge stays at 1 + O(eps^2), below
// the O(eps) noise floor of the quotient), and returns the difference
// quotients ([W_i, W_{i+k}] - [V_i, V_{i+k}]) / eps. To first order these
// equal c_i / sin(2 pi/n).
inline std::vector<double> finite_difference_oracle(const DeformationInput& in,
                                                    double eps = 1e-6) {
  validate_deformation_input(in);
  const int n = in.n;
  const int k = in.k;
  const double root = std::sqrt(std::sin(detail::kPi / n));

  std::vector<Vec2<double>> base(2 * n), deformed(2 * n);
  const DeformationCoefficients coeff = coefficients_from_q(in);
  for (int i = 0; i < n; ++i)
    base[i] = Vec2<double>{std::cos(i * detail::kPi / n) / root,
                           std::sin(i * detail::kPi / n) / root};
  for (int i = 0; i < n; ++i) base[n + i] = -base[i];
  for (int i = 0; i < n; ++i) {
    const Vec2<double> e = coeff.p[i] * base[i] + coeff.p_bar[i] * base[i + 1];
    deformed[i] = base[i] + eps * e;
  }
  for (int i = 0; i < n; ++i) deformed[n + i] = -deformed[i];

  // Per-vertex scales t_i > 0 with t_i t_{i+1} det(W_i, W_{i+1}) = 1.
  std::vector<double> log_delta(n);
  for (int i = 0; i < n; ++i) log_delta[i] = std::log(det(deformed[i], deformed[i + 1]));
  std::vector<double> log_t(n, 0.0);
  if (n % 2 == 1) {
    double alt = 0.0;
    for (int j = 0; j < n; ++j) alt += (j % 2 == 0 ? 1.0 : -1.0) * log_delta[j];
    log_t[0] = -0.5 * alt;
  }
  for (int i = 0; i + 1 < n; ++i) log_t[i + 1] = -log_t[i] - log_delta[i];
  for (int i = 0; i < n; ++i) {
    const double t = std::exp(log_t[i]);
    deformed[i] = t * deformed[i];
    deformed[n + i] = -deformed[i];
  }

  std::vector<double> quotient(n);
  for (int i = 0; i < n; ++i)
    quotient[i] = (det(deformed[i], deformed[i + k]) - det(base[i], base[i + k])) / eps;
  return quotient;
}

}  // namespace frieze
