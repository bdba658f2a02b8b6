#include <doctest.h>

#include "hkb/bound_engine.hpp"
#include "hkb/envelope.hpp"

using namespace hkb;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

SearchParams coarse() {
  SearchParams p;
  p.t_count = 21;
  return p;
}

}  // namespace

TEST_SUITE("envelope") {
  TEST_CASE("phi(0) is 0") {
    CHECK(phi_envelope(q(0), q(6), {q(1), q(1)}, 7, coarse()) == q(0));
    CHECK(phi_envelope(q(0), q(9), {}, 5, coarse()) == q(0));
  }

  TEST_CASE("at t = 1 it reaches the mu = 3 bound") {
    const PhiEnvelope env(q(6), {q(1), q(1)}, 7, coarse());
    const Rational v = env(q(1));
    CHECK(v.to_double() >= 1.33532 - 1e-4);
    // Certified: the value is attained exactly by some node.
    bool attained = false;
    for (const auto& n : env.nodes()) {
      REQUIRE(n.value == noroots_bound(q(6), {q(1), q(1)}, 7, EvalPoint(n.s, n.t0, n.t0)));
      if (q(1) - n.t0 + n.value == v) attained = true;
    }
    CHECK(attained);
    CHECK_THROWS(phi_envelope(q(3, 2), q(6), {}, 7, coarse()));
  }

  TEST_CASE("monotone with slope at least one once positive") {
    const PhiEnvelope env(q(6), {q(1), q(1)}, 7, coarse());
    EnvelopeSamples samples;
    for (long i = 0; i <= 40; ++i) samples.emplace_back(q(i, 40), env(q(i, 40)));
    CHECK(is_nondecreasing(samples));
    EnvelopeSamples positive;
    for (const auto& s : samples)
      if (s.second > q(0)) positive.push_back(s);
    CHECK(has_unit_slope_growth(positive));
    for (const auto& s : samples) CHECK(s.second <= samples.back().second);
  }

  TEST_CASE("concave majorant") {
    const EnvelopeSamples pts{{q(0), q(0)}, {q(1, 4), q(0)}, {q(1, 2), q(1, 4)}, {q(3, 4), q(3, 4)}, {q(1), q(1)}};
    CHECK_FALSE(is_concave(pts));
    const EnvelopeSamples hull = concave_majorant(pts);
    CHECK(is_concave(hull));
    CHECK(hull.front() == pts.front());
    CHECK(hull.back() == pts.back());
    CHECK(is_concave({{q(0), q(0)}, {q(1, 2), q(3, 4)}, {q(1), q(1)}}));
    CHECK(is_nondecreasing(hull));
  }
}
