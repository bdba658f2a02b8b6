#include <doctest.h>

#include "hkb/series_targets.hpp"
#include "hkb/simplex_volume.hpp"
#include "oracles.hpp"

using namespace hkb;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace

TEST_SUITE("series-targets") {
  TEST_CASE("zigzag numbers") {
    const auto z = zigzag_numbers(10);
    const long expected[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
    REQUIRE(z.size() == 11);
    for (int i = 0; i <= 10; ++i) CHECK(z[i] == expected[i]);
  }

  TEST_CASE("m_d against the series of (1 + sin x) / cos x") {
    const auto m = m_coeffs(14);
    const auto series = oracle::sec_plus_tan(14);
    REQUIRE(m.size() == 14);
    CHECK(series[0] == q(1));
    for (unsigned d = 1; d <= 14; ++d) {
      CAPTURE(d);
      CHECK(m[d - 1] == series[d]);
      CHECK(m[d - 1] == Rational(zigzag_numbers(d)[d]) / Rational(factorial(d)));
    }
    CHECK(m[0] == q(1));
    CHECK(m[1] == q(1, 2));
    CHECK(m[6] == q(17, 315));
    CHECK(m[7] == q(277, 8064));
    CHECK(q(1) + m[6] == q(332, 315));
    CHECK(q(1) + m[7] == q(8341, 8064));
    for (unsigned d = 2; d <= 14; ++d) {
      CHECK(m[d - 1] > q(0));
      if (d >= 3) CHECK(m[d - 1] < m[d - 2]);
    }
  }

  TEST_CASE("quadric closed form") {
    CHECK(ehk_quadric_dim7(q(3)) == q(71, 67));
    CHECK(ehk_quadric_dim7(q(5)) == q(2563, 2427));
    CHECK(ehk_quadric_dim7(q(5)) == q(215292, 203868));
    CHECK(ehk_quadric_dim7(q(3)) > ehk_quadric_dim7(q(5)));
    CHECK(ehk_quadric_dim7(q(5)) > ehk_quadric_dim7(q(7)));
    CHECK(std::abs(ehk_quadric_dim7(q(10000)).to_double() - 332.0 / 315.0) <= 1e-6);
    CHECK_THROWS_AS(ehk_quadric_dim7(q(2)), std::invalid_argument);
    // Direct big-integer evaluation.
    const BigInt p = 5;
    const BigInt p2 = p * p;
    const BigInt p4 = p2 * p2;
    CHECK(ehk_quadric_dim7(q(5)) == Rational(BigInt(332 * p4 + 304 * p2 + 192), BigInt(315 * p4 + 273 * p2 + 168)));
  }

  TEST_CASE("quadric identities") {
    const QuadricIdentities id = verify_quadric_identities();
    CHECK(id.decomposition);
    CHECK_FALSE(id.decomposition_with_4025);
    CHECK(id.derivative);
    CHECK(id.derivative_negative_at_3);
    CHECK(id.decreasing);
    CHECK(id.above_limit);
    CHECK(id.ok());
    // The decomposition at p = 3, both sides exact.
    CHECK(q(71, 67) - q(332, 315) == q(244 * 9 + 224, 4725 * 81 + 4095 * 9 + 2520));
    CHECK(q(71, 67) - q(332, 315) != q(244 * 9 + 224, 4725 * 81 + 4025 * 9 + 2520));
  }

  TEST_CASE("targets") {
    CHECK(wy_target(7, q(3)).value == q(71, 67));
    CHECK(wy_target(7, q(3)).provenance == TargetProvenance::closed_form_d7);
    CHECK(wy_target(7).value == q(332, 315));
    CHECK(wy_target(7).provenance == TargetProvenance::series);
    CHECK(wy_target(8).value == q(8341, 8064));
    CHECK(wy_target(2).value == q(3, 2));
    CHECK_THROWS_WITH_AS(wy_target(8, q(3)), "no closed form available", std::invalid_argument);
    CHECK(to_string(TargetProvenance::closed_form_d7) == "closed-form-d7");
    for (unsigned d = 1; d <= 14; ++d) CHECK(wy_target(d).value > q(1));
  }

  TEST_CASE("large-e threshold") {
    CHECK(large_e_threshold(7, q(71, 67)) == 5340);
    CHECK(large_e_threshold(1, q(2)) == 2);
    CHECK(large_e_threshold(8, q(8341, 8064)) == 41705);
    // Every e above the threshold beats the target; the threshold itself does not.
    const Rational f7(factorial(7));
    CHECK(q(5341) / f7 > q(71, 67));
    CHECK(q(5340) / f7 <= q(71, 67));
  }
}
