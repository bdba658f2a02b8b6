#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "hkb/rational.hpp"

namespace hkb {

// Lower bounds for the Hilbert-Kunz multiplicity e_HK(R) of a local ring of
// dimension d, Hilbert-Samuel multiplicity e, with mu minimal generators of
// m/x* and k adjoined square roots. All are exact functions of (s, t) built
// from nu (see simplex_volume.hpp).

/// An order value t_i of a generator, with multiplicity (how many generators
/// share it). Offsets lie in [0, 1].
struct OrderValue {
  unsigned multiplicity = 1;
  Rational offset;

  bool operator==(const OrderValue&) const = default;
};

struct BoundSpec {
  unsigned dimension = 7;
  Rational e = 6;
  unsigned mu = 4;
  unsigned k = 1;
  /// Known order values of generators z_{k+2}..z_mu; any generator not
  /// listed contributes offset 1.
  std::vector<OrderValue> extra;

  /// Throws std::invalid_argument when an invariant fails: d >= 1, e > 0,
  /// mu >= 1, k >= 1 implies mu >= k + 1, offsets in [0, 1] and total
  /// multiplicity of extra <= mu - k - 1.
  void validate() const;

  /// Offsets t_{k+2}..t_mu, expanded, padded with 1.
  std::vector<Rational> generator_offsets() const;

  bool operator==(const BoundSpec&) const = default;
};

struct EvalPoint {
  EvalPoint(Rational s, Rational t) : s(std::move(s)), t(t), t0(std::move(t)) {}
  EvalPoint(Rational s, Rational t, Rational t0) : s(std::move(s)), t(std::move(t)), t0(std::move(t0)) {}

  /// Throws std::invalid_argument unless s >= 0 and 0 <= t0 <= t <= 1.
  void validate() const;

  Rational s;
  Rational t;
  Rational t0;
};

/// The parabola is degenerate (nu_{s0-1} = 0), so H is linear in e and has no
/// vertex.
class LinearInE : public std::domain_error {
 public:
  LinearInE() : std::domain_error("linear-in-e") {}
};

/// t - t0 + e (nu_s - sum_k nu_{s - t_k} - nu_{s - t0}); with t = t0 = 1 this
/// is the e_HK bound, otherwise a lower bound for phi(t).
Rational noroots_bound(const Rational& e, const std::vector<Rational>& offsets, unsigned d, const EvalPoint& point);

/// 1 - t/2^k + e (nu_s - (mu-k-1) nu_{s-1} - k nu_{s-1/2} - nu_{s-t}), with
/// the (mu-k-1) generators' offsets taken from spec.extra (default 1).
Rational general_bound(const BoundSpec& spec, const Rational& s, const Rational& t);

/// The same bracket for e_HK(S), S the extension by k square roots:
/// 1 - t + 2^k e (...). general_bound = 1 + (s_bound - 1) / 2^k.
/// Throws std::invalid_argument for k = 0.
Rational s_bound(const BoundSpec& spec, const Rational& s, const Rational& t);

/// H_e(s,t): general_bound with the worst case mu = e - 2. e may be
/// non-integral; requires e >= k + 3.
Rational h_bound(const Rational& e, unsigned d, const Rational& s, const Rational& t, unsigned k = 1);

/// H_e(s,t) = a e^2 + b e + c.
struct Quadratic {
  Rational a;
  Rational b;
  Rational c;

  Rational operator()(const Rational& e) const { return (a * e + b) * e + c; }
};

Quadratic quadratic_in_e(unsigned d, const Rational& s, const Rational& t, unsigned k = 1);

/// Vertex -b/(2a) of the parabola in e at (s0, t0). Throws LinearInE when
/// s0 <= 1.
Rational e_max(unsigned d, const Rational& s0, const Rational& t0, unsigned k = 1);

/// min(H_{e1}, H_{e2}) at (s0, t0): a lower bound for H_e at every e in
/// [e1, e2] since a <= 0.
Rational range_min(unsigned d, const Rational& e1, const Rational& e2, const Rational& s0, const Rational& t0,
                   unsigned k = 1);

/// e (nu_s - mu nu_{s-1}), the bound used for small mu.
Rational mu_small_bound(const Rational& e, unsigned mu, unsigned d, const Rational& s);

/// 1 + 1/2^k, the bound when the k-th square-root extension fails to be normal.
Rational not_normal_bound(unsigned k);

// Float counterparts for search. Same formulas on nu_float.
double noroots_bound_float(double e, const std::vector<double>& offsets, unsigned d, double s, double t, double t0);
double general_bound_float(const BoundSpec& spec, double s, double t);
double h_bound_float(double e, unsigned d, double s, double t, unsigned k = 1);
double mu_small_bound_float(double e, unsigned mu, unsigned d, double s);

}  // namespace hkb
