// algebra.hpp
//
// Tiny fixed-size linear algebra shared by the Hill-equation and geometry
// code: 2-vectors and 2x2 matrices over an arbitrary scalar.
#pragma once

namespace frieze {

template <class Scalar>
struct Vec2 {
  Scalar x{};
  Scalar y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const Scalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

template <class Scalar>
Scalar det(const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class Scalar>
struct Mat2 {
  // row-major: [[a, b], [c, d]]
  Scalar a{}, b{}, c{}, d{};

  static Mat2 identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend Vec2<Scalar> operator*(const Mat2& m, const Vec2<Scalar>& v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  }
  friend bool operator==(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }

  Scalar determinant() const { return a * d - b * c; }
  // Inverse assuming determinant 1 (the only case the library needs).
  Mat2 inverse_unimodular() const { return {d, -b, -c, a}; }
};

}  // namespace frieze
