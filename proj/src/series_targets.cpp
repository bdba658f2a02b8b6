#include "hkb/series_targets.hpp"

#include <stdexcept>

#include "hkb/simplex_volume.hpp"

namespace hkb {

std::vector<BigInt> zigzag_numbers(unsigned n) {
  // Boustrophedon triangle: T(0,0) = 1, T(r,0) = 0, T(r,c) = T(r,c-1) + T(r-1,r-c).
  std::vector<BigInt> out{BigInt(1)};
  std::vector<BigInt> prev{BigInt(1)};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<BigInt> row(r + 1);
    row[0] = 0;
    for (unsigned c = 1; c <= r; ++c) row[c] = row[c - 1] + prev[r - c];
    out.push_back(row[r]);
    prev = std::move(row);
  }
  return out;
}

std::vector<Rational> m_coeffs(unsigned n_max) {
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
  const auto zz = zigzag_numbers(n_max);
  std::vector<Rational> m;
  m.reserve(n_max);
  for (unsigned d = 1; d <= n_max; ++d) m.emplace_back(zz[d], factorial(d));
  return m;
}

Polynomial quadric_dim7_numerator() { return Polynomial({192, 0, 304, 0, 332}); }
Polynomial quadric_dim7_denominator() { return Polynomial({168, 0, 273, 0, 315}); }

Rational ehk_quadric_dim7(const Rational& p) {
  if (p < Rational(3)) throw std::invalid_argument("characteristic parameter must be >= 3");
  return quadric_dim7_numerator()(p) / quadric_dim7_denominator()(p);
}

QuadricIdentities verify_quadric_identities() {
  QuadricIdentities r;
  const Polynomial num = quadric_dim7_numerator();
  const Polynomial den = quadric_dim7_denominator();
  const Rational limit(BigInt(332), BigInt(315));

  // num/den - limit == top/bottom  <=>  (num - limit*den) * bottom == top * den
  const Polynomial top({224, 0, 244});
  const Polynomial excess = num - den * limit;
  r.decomposition = excess * Polynomial({2520, 0, 4095, 0, 4725}) == top * den;
  r.decomposition_with_4025 = excess * Polynomial({2520, 0, 4025, 0, 4725}) == top * den;

  // (num/den)' = (num' den - num den') / den^2 == -g / f  <=>  (num' den - num den') f == -g den^2
  const Polynomial g({0, 128, 0, 896, 0, 488});
  const Polynomial f({1344, 0, 4368, 0, 8589, 0, 8190, 0, 4725});
  const Polynomial wronskian = num.derivative() * den - num * den.derivative();
  r.derivative = wronskian * f == Rational(-1) * g * den * den;
  r.derivative_negative_at_3 = wronskian(Rational(3)).sign() < 0;

  r.decreasing = true;
  r.above_limit = true;
  Rational previous = ehk_quadric_dim7(Rational(3));
  for (int p = 3; p <= 199; p += 2) {
    const Rational v = ehk_quadric_dim7(Rational(p));
    if (p > 3 && !(v < previous)) r.decreasing = false;
    if (!(v > limit)) r.above_limit = false;
    previous = v;
  }
  return r;
}

std::string to_string(TargetProvenance p) {
  switch (p) {
    case TargetProvenance::series: return "series";
    case TargetProvenance::closed_form_d7: return "closed-form-d7";
    case TargetProvenance::user_supplied: return "user-supplied";
  }
  return "unknown";
}

TargetValue wy_target(unsigned d, const std::optional<Rational>& p) {
  if (d == 0) throw std::invalid_argument("dimension must be >= 1");
  if (p) {
    if (d != 7) throw std::invalid_argument("no closed form available");
    return TargetValue{d, p, ehk_quadric_dim7(*p), TargetProvenance::closed_form_d7};
  }
  return TargetValue{d, std::nullopt, Rational(1) + m_coeffs(d).back(), TargetProvenance::series};
}

BigInt large_e_threshold(unsigned d, const Rational& target) {
  if (d == 0) throw std::invalid_argument("dimension must be >= 1");
  return (target * Rational(factorial(d))).floor();
}

}  // namespace hkb
