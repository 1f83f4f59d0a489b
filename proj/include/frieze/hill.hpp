// hill.hpp
//
// Solutions of the discrete Hill equation V_{i+1} = a_i V_i - V_{i-1}
// attached to a frieze pattern. Every solution of the equation of a valid
// frieze is antiperiodic, V_{i+n} = -V_i, which hill_solution asserts.
// When the initial pair has det(V_0, V_1) = 1 (the distinguished basis) the
// frieze entries coincide with the determinants: entry(i, d) = det(V_i, V_{i+d}).
#pragma once

#include <cmath>
#include <vector>

#include "frieze/algebra.hpp"
#include "frieze/errors.hpp"
#include "frieze/pattern.hpp"

namespace frieze {

template <class Scalar>
struct HillSolution {
  std::vector<Vec2<Scalar>> period;  // V_0 .. V_{n-1}
  bool unimodular_basis = false;     // det(V_0, V_1) == 1

  int n() const { return static_cast<int>(period.size()); }

  // Antiperiodic extension: V_{i+n} = -V_i for any integer i.
  Vec2<Scalar> at(long i) const {
    const int nn = n();
    long r = i % (2L * nn);
    if (r < 0) r += 2L * nn;
    const Vec2<Scalar>& v = period[static_cast<size_t>(r % nn)];
    return r < nn ? v : -v;
  }
};

template <class Scalar>
HillSolution<Scalar> hill_solution(const FriezePattern<Scalar>& f, Vec2<Scalar> v0,
                                   Vec2<Scalar> v1) {
  const int n = f.period();
  const auto& a = f.first_row();
  std::vector<Vec2<Scalar>> values;
  values.reserve(n + 2);
  values.push_back(v0);
  values.push_back(v1);
  for (int i = 1; i <= n; ++i)
    values.push_back(a[i % n] * values[i] - values[i - 1]);

  auto antiperiodic = [&](const Vec2<Scalar>& got, const Vec2<Scalar>& expect) {
    if constexpr (FriezePattern<Scalar>::is_exact) {
      return got == -expect;
    } else {
      double scale = 1.0;
      for (const auto& v : values) scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
      return std::abs(got.x + expect.x) <= 1e-9 * scale && std::abs(got.y + expect.y) <= 1e-9 * scale;
    }
  };
  if (!antiperiodic(values[n], v0) || !antiperiodic(values[n + 1], v1))
    throw NotAFrieze("Hill solution is not antiperiodic; the pattern is not a valid frieze");

  HillSolution<Scalar> sol;
  sol.period.assign(values.begin(), values.begin() + n);
  sol.unimodular_basis = (det(v0, v1) == Scalar(1));
  return sol;
}

// The distinguished basis from V_0 = (1,0), V_1 = (0,1); its determinants
// reproduce the frieze entries exactly.
template <class Scalar>
HillSolution<Scalar> distinguished_hill_basis(const FriezePattern<Scalar>& f) {
  return hill_solution(f, Vec2<Scalar>{Scalar(1), Scalar(0)}, Vec2<Scalar>{Scalar(0), Scalar(1)});
}

}  // namespace frieze
