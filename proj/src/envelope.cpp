#include "hkb/envelope.hpp"

#include <algorithm>
#include <stdexcept>

#include "hkb/bound_engine.hpp"

namespace hkb {

PhiEnvelope::PhiEnvelope(Rational e, std::vector<Rational> offsets, unsigned d, const SearchParams& search)
    : e_(std::move(e)), offsets_(std::move(offsets)), d_(d) {
  search.validate(d);
  const auto [s_lo, s_hi] = search.s_range(d);
  std::vector<double> offsets_f;
  for (const auto& a : offsets_) offsets_f.push_back(a.to_double());
  const double e_f = e_.to_double();

  const unsigned n = search.t_count;
  for (unsigned i = 0; i < n; ++i) {
    const Rational t0 = search.t_lo + (search.t_hi - search.t_lo) * Rational(i) / Rational(n - 1);
    const double t0_f = t0.to_double();
    const Candidate c = optimize_grid(
        [&](double s, double) { return noroots_bound_float(e_f, offsets_f, d_, s, t0_f, t0_f); },
        s_lo.to_double(), s_hi.to_double(), t0_f, t0_f, search);
    const Rational s = std::clamp(rationalize(c.s, search.max_denominator), s_lo, s_hi);
    nodes_.push_back(Node{t0, s, noroots_bound(e_, offsets_, d_, EvalPoint(s, t0, t0))});
  }
}

Rational PhiEnvelope::operator()(const Rational& t) const {
  if (t.sign() < 0 || t > Rational(1)) throw std::invalid_argument("t outside [0,1]");
  Rational best = 0;
  for (const auto& node : nodes_) {
    if (node.t0 > t) break;
    best = max(best, t - node.t0 + node.value);
  }
  return best;
}

Rational phi_envelope(const Rational& t, const Rational& e, const std::vector<Rational>& offsets, unsigned d,
                      const SearchParams& search) {
  return PhiEnvelope(e, offsets, d, search)(t);
}

bool is_nondecreasing(const EnvelopeSamples& samples) {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].second < samples[i - 1].second) return false;
  }
  return true;
}

bool has_unit_slope_growth(const EnvelopeSamples& samples) {
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const auto& [t1, v1] = samples[i - 1];
    const auto& [t2, v2] = samples[i];
    if (v2 - v1 < t2 - t1) return false;
  }
  return true;
}

namespace {

// Sign of the turn a -> b -> c; >= 0 means b is on or below the chord a-c.
Rational cross(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b,
               const std::pair<Rational, Rational>& c) {
  return (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
}

}  // namespace

bool is_concave(const EnvelopeSamples& samples) {
  for (std::size_t i = 2; i < samples.size(); ++i) {
    if (cross(samples[i - 2], samples[i - 1], samples[i]).sign() > 0) return false;
  }
  return true;
}

EnvelopeSamples concave_majorant(const EnvelopeSamples& samples) {
  EnvelopeSamples hull;
  for (const auto& p : samples) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p).sign() >= 0) hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

}  // namespace hkb
