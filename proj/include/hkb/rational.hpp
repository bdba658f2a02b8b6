#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hkb {

using BigInt = mpz_class;

/// Exact rational number. Always held in lowest terms with a positive
/// denominator; every arithmetic operation is exact.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                       // NOLINT(implicit)
  Rational(long v) : q_(v) {}                      // NOLINT(implicit)
  Rational(long long v) : q_(BigInt(std::to_string(v))) {}  // NOLINT(implicit)
  Rational(unsigned v) : q_(v) {}                  // NOLINT(implicit)
  Rational(unsigned long v) : q_(v) {}             // NOLINT(implicit)
  Rational(const BigInt& v) : q_(v) {}             // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "a", "a/b" or a decimal literal such as "-2.74118" or "1.5e-3".
  /// Decimals are converted exactly (0.779643 -> 779643/1000000).
  static Rational parse(std::string_view text);

  /// The exact value of a finite binary double.
  static Rational from_double(double x);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  /// "n/d" in lowest terms, or "n" when the value is an integer.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const;
  Rational pow(unsigned exponent) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Exact power of two, 2^k.
Rational pow2(unsigned k);

}  // namespace hkb
