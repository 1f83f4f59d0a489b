// geometry.hpp
//
// The frieze <-> polygon correspondence and the planar polygon experiments.
//
// A frieze of period n determines a polygonal line V_0, V_1, ... in R^2 with
// det(V_i, V_{i+1}) = 1 and V_{i+n} = -V_i (a solution basis of its Hill
// equation); projecting the V_i to the projective line gives an n-gon, and
// for odd n the map between friezes and projective classes of such n-gons is
// one-to-one. Here a polygonal lift is stored in polar form: strictly
// increasing angles 0 <= theta_0 < ... < theta_{n-1} < pi and positive radii
// with r_i r_{i+1} sin(theta_{i+1} - theta_i) = 1, where theta_n means
// theta_0 + pi. Frieze entries are recovered as
//   entry(i, d) = r_i r_{i+d} sin(theta_{i+d} - theta_i).
//
// frieze_to_polygon canonicalizes the SL(2)-freedom by whitening the vertex
// covariance (sum V_i V_i^T proportional to the identity) and rotating
// theta_0 to 0; constant friezes land exactly on the regular polygon
// theta_i = i pi/n, r_i = 1/sqrt(sin(pi/n)).
//
// Equilateral convex polygons (unit sides) support the diagonal-length
// comparison experiments; sampling parametrizes by positive exterior angles
// summing to 2 pi and closes the edge loop with a least-norm Newton
// iteration on the two closure equations.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "frieze/algebra.hpp"
#include "frieze/cyclic.hpp"
#include "frieze/detail/rng.hpp"
#include "frieze/errors.hpp"
#include "frieze/hill.hpp"
#include "frieze/pattern.hpp"
#include "frieze/sign_analysis.hpp"

namespace frieze {

struct ProjectivePolygon {
  int n = 0;
  std::vector<double> angles;
  std::vector<double> radii;

  // Angle of vertex j for any 0 <= j <= 2n, unwrapping by +pi per turn.
  double angle_at(int j) const { return angles[j % n] + detail::kPi * (j / n); }
  double radius_at(int j) const { return radii[j % n]; }

  // Max deviation of consecutive determinants from 1 (wrap edge included),
  // relative to the size of the products involved so large lifts are not
  // penalized for plain roundoff.
  double lift_error() const {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double rr = radius_at(i) * radius_at(i + 1);
      const double d = rr * std::sin(angle_at(i + 1) - angle_at(i));
      worst = std::max(worst, std::abs(d - 1.0) / (1.0 + rr));
    }
    return worst;
  }
};

namespace detail {

// A = det(S)^{1/4} S^{-1/2} for symmetric positive definite S; the unique
// (up to rotation) unimodular map sending S to a multiple of the identity.
inline Mat2<double> whitening_map(double sxx, double sxy, double syy) {
  const double tr = sxx + syy;
  const double dt = sxx * syy - sxy * sxy;
  const double gap = std::sqrt(std::max(0.0, tr * tr / 4.0 - dt));
  const double l1 = tr / 2.0 + gap;
  const double l2 = tr / 2.0 - gap;
  // Eigenvector for l1; the second axis is its perpendicular.
  double ex = sxy, ey = l1 - sxx;
  if (std::abs(ex) + std::abs(ey) < 1e-300) {
    ex = 1.0;
    ey = 0.0;
  }
  const double norm = std::hypot(ex, ey);
  ex /= norm;
  ey /= norm;
  const double w1 = 1.0 / std::sqrt(l1);
  const double w2 = 1.0 / std::sqrt(l2);
  // Q diag(w) Q^T scaled by det(S)^{1/4}.
  const double s = std::pow(dt, 0.25);
  return Mat2<double>{s * (w1 * ex * ex + w2 * ey * ey), s * (w1 - w2) * ex * ey,
                      s * (w1 - w2) * ex * ey, s * (w1 * ey * ey + w2 * ex * ex)};
}

}  // namespace detail

inline ProjectivePolygon frieze_to_polygon(const FriezeD& f) {
  const int n = f.period();
  const HillSolution<double> basis = distinguished_hill_basis(f);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& v : basis.period) {
    sxx += v.x * v.x;
    sxy += v.x * v.y;
    syy += v.y * v.y;
  }
  const Mat2<double> map = detail::whitening_map(sxx, sxy, syy);

  ProjectivePolygon poly;
  poly.n = n;
  poly.angles.resize(n);
  poly.radii.resize(n);
  double base_angle = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec2<double> w = map * basis.period[i];
    double theta = std::atan2(w.y, w.x);
    if (i == 0) base_angle = theta;
    theta -= base_angle;
    theta = std::fmod(theta, detail::kPi);
    if (theta < 0.0) theta += detail::kPi;
    if (theta >= detail::kPi) theta -= detail::kPi;
    poly.angles[i] = theta;
    poly.radii[i] = std::hypot(w.x, w.y);
  }
  poly.angles[0] = 0.0;

  // For odd n the radii are pinned by the angles through the telescoping
  // unit-determinant recurrence; re-solving them here removes the radial
  // part of the propagation drift, so the border entries of the
  // reconstruction come back exact.
  if (n % 2 == 1) {
    std::vector<double> log_det(n), log_scale(n, 0.0);
    for (int i = 0; i < n; ++i)
      log_det[i] = std::log(poly.radius_at(i) * poly.radius_at(i + 1) *
                            std::sin(poly.angle_at(i + 1) - poly.angle_at(i)));
    double alt = 0.0;
    for (int j = 0; j < n; ++j) alt += (j % 2 == 0 ? 1.0 : -1.0) * log_det[j];
    log_scale[0] = -0.5 * alt;
    for (int i = 0; i + 1 < n; ++i) log_scale[i + 1] = -log_scale[i] - log_det[i];
    for (int i = 0; i < n; ++i) poly.radii[i] *= std::exp(log_scale[i]);
  }
  return poly;
}

inline ProjectivePolygon frieze_to_polygon(const FriezeQ& f) {
  return frieze_to_polygon(to_floating(f));
}

// Fills the full entry table from the polar lift. Throws InvalidLift when
// the unit-determinant invariant is broken beyond tol. The default gate is
// loose enough to absorb the roundoff a reconstructed lift of an
// ill-conditioned frieze legitimately carries.
inline FriezeD polygon_to_frieze(const ProjectivePolygon& p, double tol = 1e-6) {
  const int n = p.n;
  if (n < 4) throw IndexOutOfRange("polygon needs at least 4 vertices for a frieze");
  const double err = p.lift_error();
  if (err > tol)
    throw InvalidLift("consecutive determinants deviate from 1 by " + std::to_string(err));
  std::vector<double> cells(static_cast<std::size_t>(n) * (n + 1));
  for (int i = 0; i < n; ++i)
    for (int d = 0; d <= n; ++d)
      cells[static_cast<std::size_t>(i) * (n + 1) + d] =
          p.radius_at(i) * p.radius_at(i + d) * std::sin(p.angle_at(i + d) - p.angle_at(i));
  return FriezeD::from_entries(n, std::move(cells));
}

// Projective points of the polygon in an affine chart x = cot(theta - psi).
// The chart pole psi is placed in the middle of the polygon's largest
// angular gap, which keeps every |x| below about 2n/pi and the cross-ratio
// arithmetic well-conditioned; a vertex sitting exactly at the pole (only
// possible for hand-made inputs) maps to the explicit infinite point.
inline std::vector<ProjectivePoint<double>> projective_points(const ProjectivePolygon& p) {
  int widest = p.n - 1;
  double widest_gap = 0.0;
  for (int i = 0; i < p.n; ++i) {
    const double gap = p.angle_at(i + 1) - p.angle_at(i);
    if (gap > widest_gap) {
      widest_gap = gap;
      widest = i;
    }
  }
  const double pole = p.angle_at(widest) + widest_gap / 2.0;

  std::vector<ProjectivePoint<double>> pts(p.n);
  for (int i = 0; i < p.n; ++i) {
    double theta = std::fmod(p.angles[i] - pole, detail::kPi);
    if (theta < 0.0) theta += detail::kPi;
    const double s = std::sin(theta);
    if (std::abs(s) < 1e-14) {
      pts[i] = ProjectivePoint<double>::infinity();
    } else {
      pts[i] = ProjectivePoint<double>::finite(std::cos(theta) / s);
    }
  }
  return pts;
}

// Random frieze of odd period n >= 5: strictly increasing uniform angles in
// (0, pi), radii solved from r_{i+1} = 1/(r_i sin(theta_{i+1} - theta_i));
// for odd n the alternating product telescopes to a unique positive r_0.
//
// Angle tuples whose smallest cyclic gap falls under pi/n^2 (the natural
// scale of the smallest spacing among n uniform points) are redrawn,
// deterministically from the same stream. Near-coincident points push
// entries beyond what binary64 can certify at the tolerances the rest of
// the toolkit promises; the conditioned sampler keeps the dynamic range
// polynomial in n while accepting a constant fraction of raw draws.
inline FriezeD random_frieze(int n, std::uint64_t seed) {
  if (n < 5 || n % 2 == 0)
    throw IndexOutOfRange("random_frieze needs odd n >= 5, got " + std::to_string(n));
  detail::Rng rng(seed);
  ProjectivePolygon poly;
  poly.n = n;
  poly.angles.resize(n);
  const double min_gap = detail::kPi / (static_cast<double>(n) * n);
  bool separated = false;
  for (int attempt = 0; attempt < 100 && !separated; ++attempt) {
    for (double& a : poly.angles) a = rng.uniform(0.0, detail::kPi);
    std::sort(poly.angles.begin(), poly.angles.end());
    separated = true;
    for (int i = 0; i < n && separated; ++i)
      separated = (poly.angle_at(i + 1) - poly.angle_at(i)) >= min_gap;
  }
  if (!separated)
    throw BadAngles("could not separate angles after 100 draws (seed " + std::to_string(seed) + ")");

  std::vector<double> log_gap(n);
  for (int i = 0; i < n; ++i) log_gap[i] = std::log(std::sin(poly.angle_at(i + 1) - poly.angle_at(i)));
  double alt = 0.0;
  for (int j = 0; j < n; ++j) alt += (j % 2 == 0 ? 1.0 : -1.0) * log_gap[j];
  std::vector<double> log_r(n);
  log_r[0] = -0.5 * alt;
  for (int i = 0; i + 1 < n; ++i) log_r[i + 1] = -log_r[i] - log_gap[i];
  poly.radii.resize(n);
  for (int i = 0; i < n; ++i) poly.radii[i] = std::exp(log_r[i]);
  return polygon_to_frieze(poly);
}

// ---------------------------------------------------------------------------
// Equilateral convex polygons

struct EquilateralPolygon {
  int n = 0;
  std::vector<Vec2<double>> vertices;  // |V_{i+1} - V_i| = 1
  bool convex = false;

  Vec2<double> vertex_at(long i) const {
    return vertices[static_cast<std::size_t>(detail::imod(i, n))];
  }
};

// Samples positive exterior angles summing to 2 pi, then drives the edge
// loop closed with least-norm Newton steps on sum_j e_j = 0, backtracking
// to keep every angle inside (0, pi). Resamples internally up to 10 times
// before giving up.
inline EquilateralPolygon sample_equilateral_convex(int n, std::uint64_t seed) {
  if (n < 3) throw IndexOutOfRange("polygon needs at least 3 vertices");
  detail::Rng rng(seed);
  const double pi = detail::kPi;

  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<double> alpha(n);
    double total = 0.0;
    for (double& a : alpha) {
      a = rng.uniform(0.2, 1.0);
      total += a;
    }
    for (double& a : alpha) a *= 2.0 * pi / total;
    if (*std::max_element(alpha.begin(), alpha.end()) >= 0.95 * pi) continue;

    auto headings = [&](const std::vector<double>& ang) {
      std::vector<double> psi(n);
      psi[0] = 0.0;
      for (int j = 1; j < n; ++j) psi[j] = psi[j - 1] + ang[j - 1];
      return psi;
    };
    auto closure = [&](const std::vector<double>& psi) {
      Vec2<double> f{0.0, 0.0};
      for (int j = 0; j < n; ++j) f = f + Vec2<double>{std::cos(psi[j]), std::sin(psi[j])};
      return f;
    };

    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const std::vector<double> psi = headings(alpha);
      const Vec2<double> f = closure(psi);
      if (std::hypot(f.x, f.y) < 1e-12) {
        converged = true;
        break;
      }
      // J is 2 x (n-1): column i sums d e_j / d alpha_i over edges j > i.
      std::vector<double> jx(n - 1, 0.0), jy(n - 1, 0.0);
      double sx = 0.0, sy = 0.0;
      for (int i = n - 2; i >= 0; --i) {
        sx += -std::sin(psi[i + 1]);
        sy += std::cos(psi[i + 1]);
        jx[i] = sx;
        jy[i] = sy;
      }
      // Least-norm step: delta = J^T (J J^T)^{-1} (-f).
      double a11 = 0.0, a12 = 0.0, a22 = 0.0;
      for (int i = 0; i < n - 1; ++i) {
        a11 += jx[i] * jx[i];
        a12 += jx[i] * jy[i];
        a22 += jy[i] * jy[i];
      }
      const double det2 = a11 * a22 - a12 * a12;
      if (std::abs(det2) < 1e-300) break;
      const double l1 = (-f.x * a22 + f.y * a12) / det2;
      const double l2 = (-f.y * a11 + f.x * a12) / det2;

      double scale = 1.0;
      bool stepped = false;
      for (int bt = 0; bt < 40; ++bt) {
        std::vector<double> trial = alpha;
        double head_sum = 0.0;
        for (int i = 0; i < n - 1; ++i) {
          trial[i] += scale * (jx[i] * l1 + jy[i] * l2);
          head_sum += trial[i];
        }
        trial[n - 1] = 2.0 * pi - head_sum;
        const double lo = *std::min_element(trial.begin(), trial.end());
        const double hi = *std::max_element(trial.begin(), trial.end());
        if (lo > 1e-6 && hi < pi - 1e-6) {
          alpha = std::move(trial);
          stepped = true;
          break;
        }
        scale *= 0.5;
      }
      if (!stepped) break;
    }
    if (!converged) continue;

    EquilateralPolygon poly;
    poly.n = n;
    poly.convex = true;
    poly.vertices.resize(n);
    poly.vertices[0] = Vec2<double>{0.0, 0.0};
    double heading = 0.0;
    for (int j = 0; j + 1 < n; ++j) {
      poly.vertices[j + 1] =
          poly.vertices[j] + Vec2<double>{std::cos(heading), std::sin(heading)};
      heading += alpha[j];
    }
    return poly;
  }
  throw ClosureFailed("equilateral sampler failed to close after 10 resamples (n=" +
                      std::to_string(n) + ", seed=" + std::to_string(seed) + ")");
}

// Cyclic sequence |V^A_{i+k} - V^A_{i-1}| - |V^B_{i+k} - V^B_{i-1}|,
// comparing corresponding diagonal lengths of two equilateral polygons.
inline CyclicSeq<double> diagonal_difference(const EquilateralPolygon& a,
                                             const EquilateralPolygon& b, int k,
                                             double zero_threshold = kDefaultZeroThreshold) {
  if (a.n != b.n)
    throw PeriodMismatch("diagonal_difference: polygon sizes " + std::to_string(a.n) + " and " +
                         std::to_string(b.n) + " differ");
  if (k < 1 || k > a.n - 2)
    throw IndexOutOfRange("diagonal index k outside [1, n-2]");
  auto diag = [k](const EquilateralPolygon& p, int i) {
    const Vec2<double> d = p.vertex_at(i + k) - p.vertex_at(i - 1);
    return std::hypot(d.x, d.y);
  };
  std::vector<double> diff(a.n);
  for (int i = 0; i < a.n; ++i) diff[i] = diag(a, i) - diag(b, i);
  return CyclicSeq<double>(std::move(diff), zero_threshold);
}

}  // namespace frieze
