#include "hkb/bound_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hkb/simplex_volume.hpp"

namespace hkb {

namespace {

const Rational kHalf(BigInt(1), BigInt(2));

void require_unit_offset(const Rational& a) {
  if (a.sign() < 0 || a > Rational(1)) throw std::invalid_argument("order value offset outside [0,1]: " + a.str());
}

void require_unit_t(const Rational& t) {
  if (t.sign() < 0 || t > Rational(1)) throw std::invalid_argument("t outside [0,1]: " + t.str());
}

}  // namespace

void BoundSpec::validate() const {
  if (dimension == 0) throw std::invalid_argument("dimension must be >= 1");
  if (e.sign() <= 0) throw std::invalid_argument("multiplicity e must be positive");
  if (mu == 0) throw std::invalid_argument("mu must be >= 1");
  if (k >= 1 && mu < k + 1) throw std::invalid_argument("k square roots need mu >= k + 1");
  unsigned total = 0;
  for (const auto& ov : extra) {
    if (ov.multiplicity == 0) throw std::invalid_argument("order value multiplicity must be positive");
    require_unit_offset(ov.offset);
    total += ov.multiplicity;
  }
  if (total + k + 1 > mu) throw std::invalid_argument("more order values than generators z_{k+2}..z_mu");
}

std::vector<Rational> BoundSpec::generator_offsets() const {
  std::vector<Rational> out;
  for (const auto& ov : extra) out.insert(out.end(), ov.multiplicity, ov.offset);
  const unsigned slots = mu >= k + 1 ? mu - k - 1 : 0;
  if (out.size() < slots) out.resize(slots, Rational(1));
  return out;
}

void EvalPoint::validate() const {
  if (s.sign() < 0) throw std::invalid_argument("s must be >= 0");
  require_unit_t(t);
  if (t0.sign() < 0 || t0 > t) throw std::invalid_argument("need 0 <= t0 <= t");
}

Rational noroots_bound(const Rational& e, const std::vector<Rational>& offsets, unsigned d, const EvalPoint& point) {
  point.validate();
  Rational bracket = nu_exact(point.s, d) - nu_exact(point.s - point.t0, d);
  for (const auto& a : offsets) {
    require_unit_offset(a);
    bracket -= nu_exact(point.s - a, d);
  }
  return point.t - point.t0 + e * bracket;
}

Rational general_bound(const BoundSpec& spec, const Rational& s, const Rational& t) {
  spec.validate();
  require_unit_t(t);
  if (s.sign() < 0) throw std::invalid_argument("s must be >= 0");
  const unsigned d = spec.dimension;
  const Rational nu_shift1 = nu_exact(s - Rational(1), d);
  Rational bracket = nu_exact(s, d) - nu_exact(s - t, d);
  if (spec.k > 0) bracket -= Rational(spec.k) * nu_exact(s - kHalf, d);
  unsigned ones = spec.mu - spec.k - 1;
  for (const auto& ov : spec.extra) {
    bracket -= Rational(ov.multiplicity) * nu_exact(s - ov.offset, d);
    ones -= ov.multiplicity;
  }
  bracket -= Rational(ones) * nu_shift1;
  return Rational(1) - t / pow2(spec.k) + spec.e * bracket;
}

Rational s_bound(const BoundSpec& spec, const Rational& s, const Rational& t) {
  if (spec.k == 0) throw std::invalid_argument("s_bound needs k >= 1");
  // 2^k (general_bound - 1) + 1 expands to 1 - t + 2^k e (...).
  return Rational(1) + pow2(spec.k) * (general_bound(spec, s, t) - Rational(1));
}

Rational h_bound(const Rational& e, unsigned d, const Rational& s, const Rational& t, unsigned k) {
  if (e < Rational(k + 3)) throw std::invalid_argument("H_e needs e >= k + 3 (mu = e - 2 > k)");
  require_unit_t(t);
  return quadratic_in_e(d, s, t, k)(e);
}

Quadratic quadratic_in_e(unsigned d, const Rational& s, const Rational& t, unsigned k) {
  require_unit_t(t);
  if (s.sign() < 0) throw std::invalid_argument("s must be >= 0");
  const Rational nu_s = nu_exact(s, d);
  const Rational nu_1 = nu_exact(s - Rational(1), d);
  const Rational nu_half = nu_exact(s - kHalf, d);
  const Rational nu_t = nu_exact(s - t, d);
  return Quadratic{
      -nu_1,
      nu_s + Rational(k + 3) * nu_1 - Rational(k) * nu_half - nu_t,
      Rational(1) - t / pow2(k),
  };
}

Rational e_max(unsigned d, const Rational& s0, const Rational& t0, unsigned k) {
  const Quadratic q = quadratic_in_e(d, s0, t0, k);
  if (q.a.sign() == 0) throw LinearInE();
  return -q.b / (Rational(2) * q.a);
}

Rational range_min(unsigned d, const Rational& e1, const Rational& e2, const Rational& s0, const Rational& t0,
                   unsigned k) {
  if (e2 < e1) throw std::invalid_argument("range_min needs e1 <= e2");
  return min(h_bound(e1, d, s0, t0, k), h_bound(e2, d, s0, t0, k));
}

Rational mu_small_bound(const Rational& e, unsigned mu, unsigned d, const Rational& s) {
  if (s.sign() < 0) throw std::invalid_argument("s must be >= 0");
  return e * (nu_exact(s, d) - Rational(mu) * nu_exact(s - Rational(1), d));
}

Rational not_normal_bound(unsigned k) {
  if (k == 0) throw std::invalid_argument("not_normal_bound needs k >= 1");
  return Rational(1) + Rational(1) / pow2(k);
}

double noroots_bound_float(double e, const std::vector<double>& offsets, unsigned d, double s, double t, double t0) {
  double bracket = nu_float(s, d) - nu_float(s - t0, d);
  for (double a : offsets) bracket -= nu_float(s - a, d);
  return t - t0 + e * bracket;
}

double general_bound_float(const BoundSpec& spec, double s, double t) {
  const unsigned d = spec.dimension;
  double bracket = nu_float(s, d) - nu_float(s - t, d);
  if (spec.k > 0) bracket -= static_cast<double>(spec.k) * nu_float(s - 0.5, d);
  unsigned ones = spec.mu - spec.k - 1;
  for (const auto& ov : spec.extra) {
    bracket -= static_cast<double>(ov.multiplicity) * nu_float(s - ov.offset.to_double(), d);
    ones -= ov.multiplicity;
  }
  bracket -= static_cast<double>(ones) * nu_float(s - 1.0, d);
  return 1.0 - std::ldexp(t, -static_cast<int>(spec.k)) + spec.e.to_double() * bracket;
}

double h_bound_float(double e, unsigned d, double s, double t, unsigned k) {
  const double kd = static_cast<double>(k);
  const double bracket = nu_float(s, d) - (e - kd - 3.0) * nu_float(s - 1.0, d) - kd * nu_float(s - 0.5, d) -
                         nu_float(s - t, d);
  return 1.0 - std::ldexp(t, -static_cast<int>(k)) + e * bracket;
}

double mu_small_bound_float(double e, unsigned mu, unsigned d, double s) {
  return e * (nu_float(s, d) - static_cast<double>(mu) * nu_float(s - 1.0, d));
}

}  // namespace hkb
