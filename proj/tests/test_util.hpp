#pragma once

#include <random>

#include "hkb/rational.hpp"

namespace testutil {

/// Random rational in [lo, hi] with denominator up to max_den.
inline hkb::Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 997) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(lo * q, hi * q);
  return hkb::Rational(hkb::BigInt(num(rng)), hkb::BigInt(q));
}

}  // namespace testutil
