#include "hkb/simplex_volume.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hkb {

namespace {

constexpr unsigned kCachedFactorials = 64;

const std::array<BigInt, kCachedFactorials + 1>& factorial_table() {
  static const auto table = [] {
    std::array<BigInt, kCachedFactorials + 1> t;
    t[0] = 1;
    for (unsigned i = 1; i <= kCachedFactorials; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

const std::array<long double, kCachedFactorials + 1>& inverse_factorial_table() {
  static const auto table = [] {
    std::array<long double, kCachedFactorials + 1> t;
    long double f = 1.0L;
    t[0] = 1.0L;
    for (unsigned i = 1; i <= kCachedFactorials; ++i) {
      f *= static_cast<long double>(i);
      t[i] = 1.0L / f;
    }
    return t;
  }();
  return table;
}

long double inverse_factorial(unsigned n) {
  if (n <= kCachedFactorials) return inverse_factorial_table()[n];
  return 1.0L / std::tgamma(static_cast<long double>(n) + 1.0L);
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt ipow(const BigInt& b, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

long double ipow(long double b, unsigned e) {
  long double r = 1.0L;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

// sum_{j=0}^{m} (-1)^j C(d, j) (p - j q)^n. With n = d this is the numerator
// of nu at s = p/q over q^d d!; with n = d - 1, of its derivative over
// q^(d-1) (d-1)!.
BigInt alternating_numerator(const BigInt& p, const BigInt& q, unsigned d, unsigned n, unsigned m) {
  BigInt acc = 0;
  for (unsigned j = 0; j <= m; ++j) {
    BigInt term = binomial(d, j) * ipow(BigInt(p - q * j), n);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

void check_dimension(unsigned d) {
  if (d == 0) throw std::invalid_argument("dimension must be >= 1");
}

}  // namespace

BigInt factorial(unsigned n) {
  if (n <= kCachedFactorials) return factorial_table()[n];
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational nu_exact(const Rational& s, unsigned d) {
  check_dimension(d);
  if (s.sign() <= 0) return Rational(0);
  if (s >= Rational(d)) return Rational(1);
  const BigInt p = s.numerator();
  const BigInt q = s.denominator();
  const auto m = static_cast<unsigned>(s.floor().get_ui());
  return Rational(alternating_numerator(p, q, d, d, m), BigInt(ipow(q, d) * factorial(d)));
}

double nu_float(double s, unsigned d) {
  check_dimension(d);
  if (std::isnan(s)) return std::numeric_limits<double>::quiet_NaN();
  if (s <= 0.0) return 0.0;
  const auto dd = static_cast<double>(d);
  if (s >= dd) return 1.0;

  // The alternating sum cancels badly as s approaches d; the reflected value
  // 1 - nu(d - s) only ever sums below the midpoint.
  const bool reflect = s > 0.5 * dd;
  const long double x = reflect ? static_cast<long double>(dd) - static_cast<long double>(s)
                                : static_cast<long double>(s);
  const auto m = static_cast<unsigned>(std::floor(x));

  long double sum = 0.0L;
  long double comp = 0.0L;
  for (unsigned j = 0; j <= m && j <= d; ++j) {
    long double term = ipow(x - static_cast<long double>(j), d) * inverse_factorial(j) * inverse_factorial(d - j);
    if (j % 2 == 1) term = -term;
    const long double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) comp += (sum - t) + term;
    else comp += (term - t) + sum;
    sum = t;
  }
  const long double v = sum + comp;
  return static_cast<double>(reflect ? 1.0L - v : v);
}

PiecewisePolynomial nu_piecewise(unsigned d) {
  check_dimension(d);
  std::vector<Rational> breakpoints;
  std::vector<Polynomial> pieces;
  Polynomial running;
  for (unsigned j = 0; j <= d; ++j) breakpoints.emplace_back(j);
  for (unsigned j = 0; j < d; ++j) {
    Rational scale(BigInt(j % 2 == 0 ? 1 : -1), BigInt(factorial(j) * factorial(d - j)));
    running += Polynomial::linear_root(Rational(j)).pow(d) * scale;
    pieces.push_back(running);
  }
  return PiecewisePolynomial(std::move(breakpoints), std::move(pieces), Rational(0), Rational(1));
}

Rational nu_density(const Rational& s, unsigned d) {
  check_dimension(d);
  if (s.sign() <= 0 || s >= Rational(d)) return Rational(0);
  const BigInt p = s.numerator();
  const BigInt q = s.denominator();
  const auto m = static_cast<unsigned>(s.floor().get_ui());
  const unsigned n = d - 1;
  return Rational(alternating_numerator(p, q, d, n, m), BigInt(ipow(q, n) * factorial(n)));
}

}  // namespace hkb
