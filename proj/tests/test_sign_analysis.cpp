#include <doctest.h>

#include <algorithm>
#include <vector>

#include "frieze/search.hpp"
#include "frieze/sign_analysis.hpp"
#include "frieze/triangulation.hpp"
#include "oracles.hpp"

using frieze::CyclicSeq;
using frieze::FourSignVerdict;
using frieze::FriezeQ;
using frieze::ProjectivePoint;
using frieze::Rational;

namespace {

CyclicSeq<Rational> seq(std::initializer_list<long> values) {
  std::vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return CyclicSeq<Rational>(std::move(v));
}

}  // namespace

TEST_CASE("cyclic sign changes") {
  CHECK(frieze::sign_changes(seq({1, -1, 2, -3})) == 4);
  CHECK(frieze::sign_changes(seq({1, 2, 3, 4})) == 0);
  CHECK(frieze::sign_changes(seq({1, 0, -1, 1})) == 2);
  CHECK(frieze::sign_changes(seq({0, 0, 0})) == 0);
  CHECK(frieze::sign_changes(seq({5})) == 0);
  CHECK(seq({0, 0, 0}).all_zero());
}

TEST_CASE("sign changes: rotation/negation invariance, evenness, naive oracle") {
  frieze::detail::Rng rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(12));
    std::vector<Rational> values;
    for (int i = 0; i < n; ++i)
      values.emplace_back(static_cast<long>(rng.uniform_index(7)) - 3);
    const CyclicSeq<Rational> s(values);
    const int count = frieze::sign_changes(s);

    CHECK(count % 2 == 0);
    CHECK(count == oracles::naive_cyclic_sign_changes(values));

    std::vector<Rational> negated;
    for (const auto& v : values) negated.push_back(-v);
    CHECK(frieze::sign_changes(CyclicSeq<Rational>(negated)) == count);

    std::vector<Rational> rotated(values.begin() + n / 2, values.end());
    rotated.insert(rotated.end(), values.begin(), values.begin() + n / 2);
    CHECK(frieze::sign_changes(CyclicSeq<Rational>(rotated)) == count);
  }
}

TEST_CASE("floating sequences treat sub-threshold entries as zeros") {
  const CyclicSeq<double> s({1.0, 1e-15, -1.0, 1.0});
  CHECK(s.sign_at(1) == 0);
  CHECK(frieze::sign_changes(s) == 2);
  const CyclicSeq<double> loose({1.0, -1e-3, 1.0, 2.0}, 1e-2);
  CHECK(frieze::sign_changes(loose) == 0);
}

TEST_CASE("row differences") {
  const FriezeQ f = FriezeQ::build_from_first_row(
      {Rational(1), Rational(3), Rational(2), Rational(2), Rational(1), Rational(4), Rational(2)});
  const auto zero = frieze::row_difference(f, f, 2);
  CHECK(zero.all_zero());

  const FriezeQ g = FriezeQ::build_from_first_row(
      {Rational(1), Rational(2), Rational(2), Rational(1), Rational(3)});
  CHECK_THROWS_AS(frieze::row_difference(f, g, 1), frieze::PeriodMismatch);
  CHECK_THROWS_AS(frieze::row_difference(f, f, 0), frieze::IndexOutOfRange);
  CHECK_THROWS_AS(frieze::row_difference(f, f, 5), frieze::IndexOutOfRange);

  const auto check = frieze::check_four_sign_changes(f, f, 1);
  CHECK(check.verdict == FourSignVerdict::degenerate);
  CHECK(check.count == 0);
}

TEST_CASE("pentagon Conway-Coxeter friezes: every distinct pair has four changes at k=1") {
  std::vector<FriezeQ> friezes;
  frieze::enumerate_triangulations(5, [&](const frieze::Triangulation& t) {
    friezes.push_back(frieze::triangulation_to_frieze(t));
    return true;
  });
  REQUIRE(friezes.size() == 5);
  int pairs = 0;
  for (std::size_t s = 0; s < friezes.size(); ++s) {
    for (std::size_t t = s + 1; t < friezes.size(); ++t) {
      const auto check = frieze::check_four_sign_changes(friezes[s], friezes[t], 1);
      CHECK(check.verdict == FourSignVerdict::satisfies_four);
      CHECK(check.count >= 4);
      ++pairs;
    }
  }
  CHECK(pairs == 10);
}

TEST_CASE("cross-ratios on rational quadruples") {
  using frieze::cross_ratio_1;
  using frieze::cross_ratio_2;
  CHECK(cross_ratio_1(Rational(0), Rational(1), Rational(2), Rational(3)) == Rational(3));
  CHECK(cross_ratio_2(Rational(0), Rational(1), Rational(2), Rational(3)) == Rational(4));
  CHECK_THROWS_AS(cross_ratio_1(Rational(1), Rational(1), Rational(2), Rational(3)),
                  frieze::DegenerateQuadruple);
  CHECK_THROWS_AS(cross_ratio_2(Rational(0), Rational(1), Rational(2), Rational(2)),
                  frieze::DegenerateQuadruple);

  frieze::detail::Rng rng(999);
  for (int trial = 0; trial < 500; ++trial) {
    Rational q[4];
    for (auto& v : q)
      v = Rational(static_cast<long>(rng.uniform_index(41)) - 20,
                   1 + static_cast<long>(rng.uniform_index(9)));
    if (q[3] == q[2] || q[1] == q[0]) continue;
    CHECK(cross_ratio_2(q[0], q[1], q[2], q[3]) - cross_ratio_1(q[0], q[1], q[2], q[3]) ==
          Rational(1));
  }
}

TEST_CASE("cross-ratios with one point at infinity match the finite limit") {
  using P = ProjectivePoint<double>;
  const P b = P::finite(1.0), c = P::finite(2.0), d = P::finite(5.0);
  const double at_infinity = frieze::cross_ratio_1(P::infinity(), b, c, d);
  const double far = frieze::cross_ratio_1(P::finite(1e9), b, c, d);
  CHECK(at_infinity == doctest::Approx((2.0 - 1.0) / (5.0 - 2.0)).epsilon(1e-12));
  CHECK(far == doctest::Approx(at_infinity).epsilon(1e-6));

  // Infinity in each slot, identity [.]_2 - [.]_1 = 1 still exact.
  const P pts[4] = {P::finite(-1.5), P::finite(0.25), P::finite(3.0), P::finite(7.0)};
  for (int slot = 0; slot < 4; ++slot) {
    P quad[4] = {pts[0], pts[1], pts[2], pts[3]};
    quad[slot] = P::infinity();
    const double r1 = frieze::cross_ratio_1(quad[0], quad[1], quad[2], quad[3]);
    const double r2 = frieze::cross_ratio_2(quad[0], quad[1], quad[2], quad[3]);
    CHECK(r2 - r1 == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(frieze::cross_ratio_1(P::infinity(), P::infinity(), c, d),
                  frieze::DegenerateQuadruple);
}

TEST_CASE("orthogonality identity: first-row differences vs Hill solution products") {
  const auto corpus = oracles::exact_frieze_corpus(10, 808);
  frieze::detail::Rng rng(4242);
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    for (std::size_t t = s + 1; t < corpus.size(); ++t) {
      const auto& f = corpus[s];
      const auto& g = corpus[t];
      if (f.period() != g.period()) continue;
      auto rand_vec = [&] {
        return frieze::Vec2<Rational>{Rational(static_cast<long>(rng.uniform_index(9)) - 4),
                                      Rational(static_cast<long>(rng.uniform_index(9)) - 4)};
      };
      const auto u = frieze::hill_solution(g, rand_vec(), rand_vec());
      const auto v = frieze::hill_solution(f, rand_vec(), rand_vec());
      Rational sum_x(0), sum_y(0);
      for (int i = 0; i < f.period(); ++i) {
        const Rational delta = f.first_row()[i] - g.first_row()[i];
        sum_x += delta * u.at(i).x * v.at(i).x;
        sum_y += delta * u.at(i).y * v.at(i).y;
      }
      CHECK(sum_x == Rational(0));
      CHECK(sum_y == Rational(0));
    }
  }
}

TEST_CASE("second row from points: degenerate quadruples are rejected") {
  using P = ProjectivePoint<Rational>;
  std::vector<P> pts{P::finite(Rational(0)), P::finite(Rational(1)), P::finite(Rational(1)),
                     P::finite(Rational(3)), P::finite(Rational(4))};
  CHECK_THROWS_AS(
      frieze::second_row_from_points(std::span<const P>(pts.data(), pts.size())),
      frieze::DegenerateQuadruple);
}
