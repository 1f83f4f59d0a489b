// rational.hpp
//
// Exact scalar type for the library: arbitrary-precision rationals kept in
// canonical reduced form (positive denominator, gcd(num, den) = 1), plus
// string/double conversions used by the serializers and the CLI.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frieze {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return numerator(q); }
inline Integer denominator_of(const Rational& q) { return denominator(q); }

// num/den with the sign moved to the numerator; the backend reduces to
// lowest terms but rejects negative denominators on its own.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline int sign_of(const Rational& q) { return q.sign(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts integer tokens ("41", "-3") and fraction tokens ("18/41", "-30/41").
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational token: '" + std::string(text) + "'");
  };
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(text)));
    }
    Integer num{std::string(text.substr(0, slash))};
    Integer den{std::string(text.substr(slash + 1))};
    if (den == 0) fail();
    return make_rational(std::move(num), std::move(den));
  } catch (const std::runtime_error&) {
    fail();
  }
  return Rational{};  // unreachable
}

// Best rational approximation of x with |x - p/q| <= tol, by walking the
// continued-fraction convergents of x. Exact doubles (integers, dyadics)
// terminate early with the exact value.
inline Rational rationalize(double x, double tol = 1e-12) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
  const bool neg = x < 0;
  double v = neg ? -x : x;
  Integer p_prev = 1, q_prev = 0;  // convergent h_{-1}/k_{-1}
  Integer p = Integer(static_cast<long long>(std::floor(v))), q = 1;
  double frac = v - std::floor(v);
  for (int it = 0; it < 64; ++it) {
    const double approx = p.convert_to<double>() / q.convert_to<double>();
    if (std::abs(approx - v) <= tol || frac == 0.0) break;
    const double inv = 1.0 / frac;
    const double a_term = std::floor(inv);
    if (a_term > 9.0e15) break;  // continued fraction has effectively terminated
    frac = inv - a_term;
    const Integer a = Integer(static_cast<long long>(a_term));
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  Rational r(p, q);
  return neg ? Rational(-r) : r;
}

}  // namespace frieze
