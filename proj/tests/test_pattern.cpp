#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "frieze/continuant.hpp"
#include "frieze/hill.hpp"
#include "frieze/pattern.hpp"
#include "oracles.hpp"

using frieze::FriezeD;
using frieze::FriezeQ;
using frieze::Rational;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<long> as_longs(const std::vector<Rational>& row) {
  std::vector<long> out;
  for (const auto& v : row) {
    REQUIRE(denominator(v) == 1);
    out.push_back(numerator(v).convert_to<long>());
  }
  return out;
}

bool is_cyclic_rotation(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < a.size() && match; ++i)
      match = (a[i] == b[(i + shift) % b.size()]);
    if (match) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("pentagon frieze from (1,2,2,1,3)") {
  const FriezeQ f = FriezeQ::build_from_first_row(rationals({1, 2, 2, 1, 3}));
  CHECK(f.period() == 5);
  CHECK(f.width() == 2);
  CHECK(frieze::validate(f).ok);
  // Width-2 glide symmetry: the second row repeats the first up to a shift.
  CHECK(is_cyclic_rotation(as_longs(f.row(2)), {1, 3, 1, 2, 2}));
  CHECK(is_cyclic_rotation(as_longs(f.row(2)), as_longs(f.row(1))));
}

TEST_CASE("heptagon frieze reproduces the classical width-4 integer array") {
  const FriezeQ f = FriezeQ::build_from_first_row(rationals({1, 3, 2, 2, 1, 4, 2}));
  CHECK(f.width() == 4);
  CHECK(frieze::validate(f).ok);
  CHECK(as_longs(f.display_row(1)) == std::vector<long>{1, 3, 2, 2, 1, 4, 2});
  CHECK(as_longs(f.display_row(2)) == std::vector<long>{2, 5, 3, 1, 3, 7, 1});
  CHECK(as_longs(f.display_row(3)) == std::vector<long>{1, 3, 7, 1, 2, 5, 3});
  CHECK(as_longs(f.display_row(4)) == std::vector<long>{1, 4, 2, 1, 3, 2, 2});

  // Row 3 contains the value 7; border spans are fixed.
  bool has_seven = false;
  for (const auto& v : f.row(3)) has_seven = has_seven || v == Rational(7);
  CHECK(has_seven);
  for (int i = 0; i < 7; ++i) {
    CHECK(f.entry(i, 0) == Rational(0));
    CHECK(f.entry(i, 1) == Rational(1));
    CHECK(f.entry(i, 7) == Rational(0));
  }
  CHECK_THROWS_AS(f.entry(0, 8), frieze::IndexOutOfRange);
  CHECK_THROWS_AS(f.entry(0, -1), frieze::IndexOutOfRange);
}

TEST_CASE("non-closing first row reports the monodromy") {
  try {
    FriezeQ::build_from_first_row(rationals({1, 1, 1, 1, 1}));
    FAIL("expected NonClosing");
  } catch (const frieze::NonClosing& e) {
    // M(1)^5 = [[0,1],[-1,1]], far from -Identity.
    CHECK(e.monodromy[0] == "0");
    CHECK(e.monodromy[1] == "1");
    CHECK(e.monodromy[2] == "-1");
    CHECK(e.monodromy[3] == "1");
  }
  CHECK_THROWS_AS(FriezeQ::build_from_first_row(rationals({1, 2, 3, 4, 5})), frieze::NonClosing);
}

TEST_CASE("builder rejects bad first rows") {
  CHECK_THROWS_AS(FriezeQ::build_from_first_row(rationals({1, 2, 3})), frieze::IndexOutOfRange);
  CHECK_THROWS_AS(FriezeQ::build_from_first_row(rationals({1, 2, 0, 2, 1})),
                  frieze::NonPositiveEntry);
  CHECK_THROWS_AS(FriezeQ::build_from_first_row(rationals({1, 2, -1, 2, 1})),
                  frieze::NonPositiveEntry);
}

TEST_CASE("continuants against the cofactor-expansion oracle") {
  using frieze::continuant;
  auto K = [](std::vector<Rational> seg) {
    return continuant<Rational>(std::span<const Rational>(seg));
  };
  CHECK(K({Rational(1), Rational(3)}) == Rational(2));
  CHECK(K({Rational(5)}) == Rational(5));
  CHECK(K({}) == Rational(1));
  CHECK(K({Rational(2), Rational(2), Rational(2)}) == Rational(4));
  CHECK(K({Rational(2), Rational(2), Rational(2)}) ==
        oracles::tridiagonal_det<Rational>({Rational(2), Rational(2), Rational(2)}));

  frieze::detail::Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> seg;
    const int len = static_cast<int>(rng.uniform_index(7));
    for (int i = 0; i < len; ++i)
      seg.emplace_back(static_cast<long>(rng.uniform_index(19)) - 9, 1 + static_cast<long>(rng.uniform_index(4)));
    CHECK(K(seg) == oracles::tridiagonal_det(seg));
  }
}

TEST_CASE("hill solutions are antiperiodic with constant step determinant") {
  const FriezeQ f = FriezeQ::build_from_first_row(rationals({1, 2, 2, 1, 3}));
  const auto basis = frieze::distinguished_hill_basis(f);
  CHECK(basis.unimodular_basis);
  CHECK(basis.at(5).x == Rational(-1));
  CHECK(basis.at(5).y == Rational(0));
  CHECK(basis.at(6).x == Rational(0));
  CHECK(basis.at(6).y == Rational(-1));
  CHECK(basis.at(-1) == -basis.at(4));  // V_{i+n} = -V_i both directions

  frieze::detail::Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const frieze::Vec2<Rational> v0{Rational(static_cast<long>(rng.uniform_index(9)) - 4),
                                    Rational(static_cast<long>(rng.uniform_index(9)) - 4)};
    const frieze::Vec2<Rational> v1{Rational(static_cast<long>(rng.uniform_index(9)) - 4),
                                    Rational(static_cast<long>(rng.uniform_index(9)) - 4)};
    const auto sol = frieze::hill_solution(f, v0, v1);
    const Rational step = det(v0, v1);
    for (int i = 0; i < f.period(); ++i) CHECK(det(sol.at(i), sol.at(i + 1)) == step);
  }
}

TEST_CASE("hill solution of the constant frieze is a scaled rotation") {
  const int n = 8;
  const double pi = 3.14159265358979323846;
  const FriezeD f = frieze::chebyshev_frieze(n);
  const double scale = 1.0 / std::sqrt(std::sin(pi / n));
  auto closed_form = [&](int i) {
    return frieze::Vec2<double>{scale * std::cos(i * pi / n), scale * std::sin(i * pi / n)};
  };
  const auto sol = frieze::hill_solution(f, closed_form(0), closed_form(1));
  for (int i = 0; i < n; ++i) {
    CHECK(sol.at(i).x == doctest::Approx(closed_form(i).x).epsilon(1e-12));
    CHECK(sol.at(i).y == doctest::Approx(closed_form(i).y).epsilon(1e-12));
  }
  CHECK(sol.at(n).x == doctest::Approx(-closed_form(0).x).epsilon(1e-12));
}

TEST_CASE("hill solution on an invalid table throws NotAFrieze") {
  // A junk entry table is not a frieze; the recurrence cannot be antiperiodic.
  std::vector<double> cells(5 * 6, 0.0);
  for (int i = 0; i < 5; ++i) {
    cells[i * 6 + 1] = 1.0;
    cells[i * 6 + 2] = 1.0 + i;
  }
  const FriezeD junk = FriezeD::from_entries(5, std::move(cells));
  CHECK_THROWS_AS(frieze::distinguished_hill_basis(junk), frieze::NotAFrieze);
}

TEST_CASE("constant friezes carry Chebyshev rows and close tightly") {
  const double pi = 3.14159265358979323846;

  const FriezeD f6 = frieze::chebyshev_frieze(6);
  CHECK(f6.first_row()[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(f6.row(2)[0] == doctest::Approx(2.0).epsilon(1e-12));  // sin(3pi/6)/sin(pi/6)

  const FriezeD f4 = frieze::chebyshev_frieze(4);
  CHECK(f4.width() == 1);
  CHECK(f4.row(1)[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  const FriezeD f5 = frieze::chebyshev_frieze(5);
  CHECK(f5.first_row()[0] == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
  for (int i = 0; i < 5; ++i)
    CHECK(f5.row(2)[i] == doctest::Approx(f5.row(1)[i]).epsilon(1e-12));

  for (int n = 4; n <= 20; ++n) {
    const FriezeD f = frieze::chebyshev_frieze(n);
    CHECK(f.closure_error() < 1e-12);
    for (int k = 1; k <= f.width(); ++k) {
      const double expected = std::sin((k + 1) * pi / n) / std::sin(pi / n);
      for (double v : f.row(k)) CHECK(std::abs(v - expected) < 1e-12);
    }
    CHECK(frieze::validate(f).ok);
  }
}

TEST_CASE("validation flags a corrupted diamond") {
  const FriezeQ f = FriezeQ::build_from_first_row(rationals({1, 3, 2, 2, 1, 4, 2}));
  const FriezeQ bad = f.replace_entry(2, 3, f.entry(2, 3) + Rational(1));
  const auto report = frieze::validate(bad);
  CHECK_FALSE(report.ok);
  bool diamond_hit = false;
  for (const auto& issue : report.issues) diamond_hit = diamond_hit || issue.category == "diamond";
  CHECK(diamond_hit);
}

TEST_CASE("exact oracle equivalence: propagation, continuants, Hill determinants") {
  const auto corpus = oracles::exact_frieze_corpus(12, 555);
  for (const auto& f : corpus) {
    const int n = f.period();
    const auto& a = f.first_row();
    const auto basis = frieze::distinguished_hill_basis(f);
    const auto report = frieze::validate(f);
    CHECK(report.ok);
    for (int i = 0; i < n; ++i) {
      for (int d = 0; d <= n; ++d) {
        const Rational via_hill = det(basis.at(i), basis.at(i + d));
        CHECK(f.entry(i, d) == via_hill);
        CHECK(f.entry(i, d) == f.entry(i + d, n - d));  // glide
        if (d >= 1) {  // at d = 0 the empty continuant is 1 while v_{i,i} = 0
          std::vector<Rational> seg;
          for (int t = i + 1; t <= i + d - 1; ++t) seg.push_back(a[t % n]);
          CHECK(f.entry(i, d) == frieze::continuant<Rational>(seg));
        }
      }
    }
    const auto mono = frieze::monodromy<Rational>(a);
    CHECK(mono == frieze::Mat2<Rational>{Rational(-1), Rational(0), Rational(0), Rational(-1)});
  }
}

TEST_CASE("the two-parameter family sweeps width-2 friezes") {
  // Every positive pair (x1, x2) closes: the remaining three first-row
  // entries are forced to (x2+1)/x1, (x1+1)/x2, (x1+x2+1)/(x1 x2).
  frieze::detail::Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational x1(1 + static_cast<long>(rng.uniform_index(12)),
                      1 + static_cast<long>(rng.uniform_index(7)));
    const Rational x2(1 + static_cast<long>(rng.uniform_index(12)),
                      1 + static_cast<long>(rng.uniform_index(7)));
    const FriezeQ f = FriezeQ::build_from_first_row(
        {x1, (x2 + 1) / x1, (x1 + 1) / x2, x2, (x1 + x2 + 1) / (x1 * x2)});
    CHECK(f.width() == 2);
    CHECK(frieze::validate(f).ok);
  }
}

TEST_CASE("rationalized floating friezes stay close and turn exact") {
  for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
    const FriezeD f = frieze::random_frieze(9, seed);
    const FriezeQ q = frieze::rationalize_pattern(f);
    CHECK(frieze::validate(q).ok);
    for (int i = 0; i < 9; ++i)
      for (int d = 0; d <= 9; ++d)
        CHECK(std::abs(frieze::to_double(q.entry(i, d)) - f.entry(i, d)) < 1e-6);
  }
}
