// oracles.hpp
//
// Test-only reference computations, kept independent of the library code
// paths they check.
#pragma once

#include <cstdint>
#include <vector>

#include "frieze/detail/rng.hpp"
#include "frieze/geometry.hpp"
#include "frieze/pattern.hpp"
#include "frieze/rational.hpp"
#include "frieze/triangulation.hpp"

namespace oracles {

// Tridiagonal determinant with the segment on the diagonal and 1s off it,
// by cofactor expansion along the last row (O(m^2), no recurrence reuse).
template <class Scalar>
Scalar tridiagonal_det(const std::vector<Scalar>& diag) {
  const std::size_t m = diag.size();
  if (m == 0) return Scalar(1);
  if (m == 1) return diag[0];
  std::vector<Scalar> minor_a(diag.begin(), diag.end() - 1);
  std::vector<Scalar> minor_b(diag.begin(), diag.end() - 2);
  return diag[m - 1] * tridiagonal_det(minor_a) - tridiagonal_det(minor_b);
}

// Sign changes of a cyclic sequence, written the slow way: rotate so the
// sequence starts at its first nonzero element, then scan linearly and
// compare the last sign against the first.
template <class T>
int naive_cyclic_sign_changes(const std::vector<T>& values, double cutoff = 0.0) {
  std::vector<int> signs;
  for (const T& v : values) {
    int s;
    if constexpr (std::is_same_v<T, frieze::Rational>) {
      s = v.sign();
    } else {
      s = (v > cutoff) ? 1 : (v < -cutoff ? -1 : 0);
    }
    if (s != 0) signs.push_back(s);
  }
  if (signs.empty()) return 0;
  int changes = 0;
  for (std::size_t i = 0; i < signs.size(); ++i)
    if (signs[i] != signs[(i + 1) % signs.size()]) ++changes;
  return changes;
}

// Mixed corpus of exact friezes: Conway-Coxeter patterns from random
// triangulations plus rationalized random floating friezes, all seeded.
inline std::vector<frieze::FriezeQ> exact_frieze_corpus(int count, std::uint64_t seed) {
  std::vector<frieze::FriezeQ> out;
  frieze::detail::Rng rng(seed);
  for (int j = 0; j < count; ++j) {
    if (j % 2 == 0) {
      const int n = 5 + static_cast<int>(rng.uniform_index(8));  // 5..12
      out.push_back(frieze::triangulation_to_frieze(
          frieze::random_triangulation(n, rng.next_u64())));
    } else {
      const int n = 5 + 2 * static_cast<int>(rng.uniform_index(5));  // odd 5..13
      out.push_back(frieze::rationalize_pattern(frieze::random_frieze(n, rng.next_u64())));
    }
  }
  return out;
}

}  // namespace oracles
