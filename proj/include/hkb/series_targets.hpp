#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkb/polynomial.hpp"
#include "hkb/rational.hpp"

namespace hkb {

/// Zigzag (Euler up/down) numbers E_0..E_n from the boustrophedon triangle.
std::vector<BigInt> zigzag_numbers(unsigned n);

/// m_1..m_n where sec x + tan x = 1 + sum_{d>=1} m_d x^d; m_d = E_d / d!.
std::vector<Rational> m_coeffs(unsigned n_max);

/// e_HK of the 7-dimensional quadric in characteristic p:
/// (332p^4 + 304p^2 + 192) / (315p^4 + 273p^2 + 168). Requires p >= 3.
Rational ehk_quadric_dim7(const Rational& p);

/// Numerator and denominator of the closed form, as polynomials in p.
Polynomial quadric_dim7_numerator();
Polynomial quadric_dim7_denominator();

struct QuadricIdentities {
  /// value - 332/315 == (244p^2 + 224) / (4725p^4 + 4095p^2 + 2520)
  bool decomposition = false;
  /// The same with 4025p^2 in the denominator. Expected false.
  bool decomposition_with_4025 = false;
  /// d/dp value == -(488p^5 + 896p^3 + 128p) / (4725p^8 + 8190p^6 + 8589p^4 + 4368p^2 + 1344)
  bool derivative = false;
  /// derivative numerator is negative at p = 3
  bool derivative_negative_at_3 = false;
  /// value strictly decreasing over odd p in [3, 199]
  bool decreasing = false;
  /// value > 332/315 over odd p in [3, 199]
  bool above_limit = false;

  bool ok() const {
    return decomposition && !decomposition_with_4025 && derivative && derivative_negative_at_3 && decreasing &&
           above_limit;
  }
};

/// Checks the closed form's identities by exact polynomial cross-multiplication.
QuadricIdentities verify_quadric_identities();

enum class TargetProvenance { series, closed_form_d7, user_supplied };

std::string to_string(TargetProvenance p);

struct TargetValue {
  unsigned dimension = 0;
  std::optional<Rational> characteristic;
  Rational value;
  TargetProvenance provenance = TargetProvenance::series;

  bool operator==(const TargetValue&) const = default;
};

/// 1 + m_d, or the d = 7 closed form when p is given. Throws
/// std::invalid_argument("no closed form available") for p with d != 7.
TargetValue wy_target(unsigned d, const std::optional<Rational>& p = std::nullopt);

/// floor(target * d!): every integer e above it has e/d! > target.
BigInt large_e_threshold(unsigned d, const Rational& target);

}  // namespace hkb
