// continuant.hpp
//
// Continuants: the tridiagonal determinants
//
//   | a_1  1            |
//   |  1  a_2  1        |
//   |      ...  ...     |
//   |          1  a_m   |
//
// evaluated by the linear recurrence K_m = a_m K_{m-1} - K_{m-2} with the
// conventions K(empty) = 1 and K(a) = a. Frieze entries are continuants of
// first-row segments, so this is an independent evaluation route for every
// entry of a pattern.
#pragma once

#include <span>

namespace frieze {

template <class Scalar>
Scalar continuant(std::span<const Scalar> segment) {
  Scalar km2 = Scalar(0);  // K_{-1}
  Scalar km1 = Scalar(1);  // K_0 = empty product
  for (const Scalar& a : segment) {
    Scalar k = a * km1 - km2;
    km2 = km1;
    km1 = k;
  }
  return km1;
}

}  // namespace frieze
