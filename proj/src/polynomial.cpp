#include "hkb/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hkb {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().sign() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<unsigned long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result({Rational(1)});
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.sign() == 0) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.abs();
    if (i == 0 || mag != Rational(1)) os << mag;
    if (i >= 1) os << (mag != Rational(1) ? "*" : "") << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces,
                                         Rational left_tail, Rational right_tail)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      left_tail_(std::move(left_tail)),
      right_tail_(std::move(right_tail)) {
  if (breakpoints_.size() != pieces_.size() + 1) {
    throw std::invalid_argument("piecewise polynomial needs one more breakpoint than pieces");
  }
  if (std::adjacent_find(breakpoints_.begin(), breakpoints_.end(),
                         [](const Rational& a, const Rational& b) { return !(a < b); }) != breakpoints_.end()) {
    throw std::invalid_argument("breakpoints must be strictly increasing");
  }
}

Rational PiecewisePolynomial::operator()(const Rational& x) const {
  if (x < breakpoints_.front()) return left_tail_;
  if (x >= breakpoints_.back()) return right_tail_;
  // First breakpoint strictly greater than x; the piece to its left contains x.
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto idx = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return pieces_[idx](x);
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
  std::vector<Polynomial> d;
  d.reserve(pieces_.size());
  for (const auto& p : pieces_) d.push_back(p.derivative());
  return PiecewisePolynomial(breakpoints_, std::move(d), Rational(0), Rational(0));
}

bool PiecewisePolynomial::is_continuous() const {
  if (pieces_.empty()) return left_tail_ == right_tail_;
  if (pieces_.front()(breakpoints_.front()) != left_tail_) return false;
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    const Rational& b = breakpoints_[i + 1];
    if (pieces_[i](b) != pieces_[i + 1](b)) return false;
  }
  return pieces_.back()(breakpoints_.back()) == right_tail_;
}

}  // namespace hkb
