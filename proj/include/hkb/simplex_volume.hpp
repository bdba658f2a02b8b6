#pragma once

#include "hkb/polynomial.hpp"
#include "hkb/rational.hpp"

namespace hkb {

// Volume of the slice {x in [0,1]^d : x_1 + ... + x_d <= s} of the unit cube,
// i.e. the Irwin-Hall CDF. Written nu_s (dimension implied) in the bound
// formulas:
//
//   nu_s = sum_{j=0}^{floor s} (-1)^j (s - j)^d / (j! (d - j)!)   for 0 <= s <= d,
//
// 0 for s <= 0 and 1 for s >= d. Every function below is total in s.

/// n! as an exact integer. Cached for n <= 64.
BigInt factorial(unsigned n);

/// Exact nu_s in dimension d (d >= 1).
Rational nu_exact(const Rational& s, unsigned d);

/// Floating nu_s. Reflects s -> d - s above the midpoint and sums the
/// alternating series with compensated long double arithmetic; agrees with
/// nu_exact to 1e-12 for d <= 12.
double nu_float(double s, unsigned d);

/// nu as a function of s: breakpoints 0..d, one degree-d piece per unit
/// interval, tails 0 and 1.
PiecewisePolynomial nu_piecewise(unsigned d);

/// Exact derivative of nu at s, using the right-hand piece at breakpoints.
/// Zero outside (0, d).
Rational nu_density(const Rational& s, unsigned d);

}  // namespace hkb
