#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hkb/rational.hpp"

namespace hkb {

/// Dense univariate polynomial with exact rational coefficients.
/// coefficient(i) multiplies x^i; trailing zeros are always stripped, so the
/// zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// x - root
  static Polynomial linear_root(const Rational& root) { return Polynomial({-root, Rational(1)}); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  Polynomial derivative() const;
  Polynomial pow(unsigned n) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Piecewise polynomial over strictly increasing rational breakpoints, with
/// constant tails outside [breakpoints.front(), breakpoints.back()].
///
/// Evaluation is right-continuous: at an interior breakpoint the piece to its
/// right is used, and at the last breakpoint the right tail is used.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                      Rational left_tail, Rational right_tail);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const Rational& left_tail() const { return left_tail_; }
  const Rational& right_tail() const { return right_tail_; }

  Rational operator()(const Rational& x) const;

  /// Piecewise derivative; both tails become 0.
  PiecewisePolynomial derivative() const;

  /// Adjacent pieces (and the tails) agree exactly at every breakpoint.
  bool is_continuous() const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
  Rational left_tail_;
  Rational right_tail_;
};

}  // namespace hkb
