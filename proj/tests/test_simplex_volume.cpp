#include <doctest.h>

#include <cmath>
#include <random>

#include "hkb/simplex_volume.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using hkb::BigInt;
using hkb::Rational;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

TEST_SUITE("simplex-volume") {
  TEST_CASE("small values") {
    CHECK(hkb::nu_exact(q(1), 7) == q(1, 5040));
    CHECK(hkb::nu_exact(q(7, 2), 7) == q(1, 2));
    CHECK(hkb::nu_exact(q(3, 2), 2) == q(7, 8));
    CHECK(hkb::nu_exact(q(-1), 5) == q(0));
    CHECK(hkb::nu_exact(q(9), 5) == q(1));
    CHECK(hkb::nu_exact(q(5, 2), 7) == oracle::nu_by_integration(q(5, 2), 7));
    CHECK_THROWS_AS(hkb::nu_exact(q(1), 0), std::invalid_argument);
  }

  TEST_CASE("factorials") {
    CHECK(hkb::factorial(0) == 1);
    CHECK(hkb::factorial(7) == 5040);
    CHECK(hkb::factorial(20) == BigInt("2432902008176640000"));
    CHECK(hkb::factorial(70) == hkb::factorial(69) * 70);
  }

  TEST_CASE("agrees with repeated integration") {
    std::mt19937_64 rng(11);
    for (unsigned d = 1; d <= 9; ++d) {
      for (int i = 0; i < 200; ++i) {
        const Rational s = testutil::random_rational(rng, -1, static_cast<long>(d) + 1);
        CAPTURE(d);
        CAPTURE(s.str());
        REQUIRE(hkb::nu_exact(s, d) == oracle::nu_by_integration(s, d));
      }
    }
  }

  TEST_CASE("symmetry, range and monotonicity") {
    std::mt19937_64 rng(12);
    for (unsigned d = 1; d <= 9; ++d) {
      const Rational dd(d);
      Rational prev(-1);
      Rational prev_s(-2);
      for (int i = 0; i < 200; ++i) {
        const Rational s = testutil::random_rational(rng, 0, static_cast<long>(d));
        const Rational v = hkb::nu_exact(s, d);
        REQUIRE(v + hkb::nu_exact(dd - s, d) == Rational(1));
        REQUIRE(v >= Rational(0));
        REQUIRE(v <= Rational(1));
      }
      for (long j = -2; j <= static_cast<long>(4 * d + 4); ++j) {
        const Rational s = q(j, 4);
        const Rational v = hkb::nu_exact(s, d);
        if (s > Rational(0) && prev_s >= Rational(0) && s <= dd) CHECK(v > prev);
        CHECK(v >= prev);
        prev = v;
        prev_s = s;
      }
    }
  }

  TEST_CASE("float path") {
    CHECK(hkb::nu_float(7.0, 7) == 1.0);
    CHECK(std::abs(hkb::nu_float(3.5, 7) - 0.5) <= 1e-12);
    CHECK(hkb::nu_float(-0.5, 3) == 0.0);
    CHECK(std::isnan(hkb::nu_float(std::nan(""), 3)));
    const Rational s = Rational::parse("2.74118");
    CHECK(std::abs(hkb::nu_float(2.74118, 7) - hkb::nu_exact(s, 7).to_double()) <= 1e-12);

    std::mt19937_64 rng(13);
    for (unsigned d = 1; d <= 12; ++d) {
      std::uniform_real_distribution<double> u(-0.5, d + 0.5);
      for (int i = 0; i < 300; ++i) {
        const double x = u(rng);
        const double exact = hkb::nu_exact(Rational::from_double(x), d).to_double();
        CAPTURE(d);
        CAPTURE(x);
        REQUIRE(std::abs(hkb::nu_float(x, d) - exact) <= 1e-12);
      }
    }
  }

  TEST_CASE("Monte Carlo frequency") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<unsigned> dim(1, 9);
    constexpr int kSamples = 1'000'000;
    for (int trial = 0; trial < 10; ++trial) {
      const unsigned d = dim(rng);
      const double s = u(rng) * d;
      int hits = 0;
      for (int i = 0; i < kSamples; ++i) {
        double sum = 0.0;
        for (unsigned j = 0; j < d; ++j) sum += u(rng);
        if (sum <= s) ++hits;
      }
      const double freq = static_cast<double>(hits) / kSamples;
      CAPTURE(d);
      CAPTURE(s);
      CHECK(std::abs(hkb::nu_float(s, d) - freq) <= 4 * (0.5 / 1000));
    }
  }

  TEST_CASE("piecewise form") {
    const auto one = hkb::nu_piecewise(1);
    REQUIRE(one.pieces().size() == 1);
    CHECK(one.pieces()[0] == hkb::Polynomial{q(0), q(1)});
    CHECK(one.left_tail() == q(0));
    CHECK(one.right_tail() == q(1));

    const auto two = hkb::nu_piecewise(2);
    REQUIRE(two.pieces().size() == 2);
    CHECK(two.pieces()[0] == hkb::Polynomial{q(0), q(0), q(1, 2)});
    CHECK(two.pieces()[1] == hkb::Polynomial{q(-1), q(2), q(-1, 2)});

    for (unsigned d = 1; d <= 9; ++d) {
      const auto f = hkb::nu_piecewise(d);
      REQUIRE(f.breakpoints().size() == d + 1);
      for (unsigned j = 0; j <= d; ++j) CHECK(f.breakpoints()[j] == Rational(j));
      for (const auto& p : f.pieces()) CHECK(p.degree() == static_cast<int>(d));
      CHECK(f.is_continuous());
      if (d >= 2) CHECK(f.derivative().is_continuous());
      for (long j = -3; j <= static_cast<long>(7 * d + 3); ++j) {
        const Rational s = q(j, 7);
        REQUIRE(f(s) == hkb::nu_exact(s, d));
      }
    }
  }

  TEST_CASE("density") {
    CHECK(hkb::nu_density(q(1, 2), 1) == q(1));
    CHECK(hkb::nu_density(q(1), 2) == q(1));
    CHECK(hkb::nu_density(q(-1), 4) == q(0));
    CHECK(hkb::nu_density(q(5), 4) == q(0));
    const auto middle = hkb::nu_piecewise(7).pieces()[3].derivative();
    CHECK(hkb::nu_density(q(7, 2), 7) == middle(q(7, 2)));
    CHECK(hkb::nu_density(q(7, 2), 7) > q(0));
    std::mt19937_64 rng(15);
    for (unsigned d = 1; d <= 9; ++d) {
      const auto deriv = hkb::nu_piecewise(d).derivative();
      for (int i = 0; i < 50; ++i) {
        const Rational s = testutil::random_rational(rng, -1, static_cast<long>(d) + 1);
        if (s > q(0) && s < Rational(d)) REQUIRE(hkb::nu_density(s, d) == deriv(s));
        REQUIRE(hkb::nu_density(s, d) >= q(0));
      }
    }
  }
}
