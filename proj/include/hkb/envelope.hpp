#pragma once

#include <utility>
#include <vector>

#include "hkb/rational.hpp"
#include "hkb/search.hpp"

namespace hkb {

/// Certified lower envelope of phi(t), the interpolating function with
/// phi(0) = 0 and phi(1) = e_HK, from
///
///   phi(t) >= t - t0 + e (nu_s - sum_k nu_{s - t_k} - nu_{s - t0}),  0 <= t0 <= t <= 1.
///
/// For each t0 on the grid t_lo..t_hi (t_count points, exact rationals) the
/// s-part is maximized once and evaluated exactly at a rational s. The
/// envelope at t is the best node with t0 <= t, shifted by t - t0, and never
/// below 0. Because nodes do not depend on t, envelope(t2) - envelope(t1)
/// >= t2 - t1 whenever envelope(t1) > 0.
class PhiEnvelope {
 public:
  struct Node {
    Rational t0;
    Rational s;
    Rational value;  // e (nu_s - sum nu_{s-t_k} - nu_{s-t0}), exact
  };

  PhiEnvelope(Rational e, std::vector<Rational> offsets, unsigned d, const SearchParams& search);

  Rational operator()(const Rational& t) const;
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  Rational e_;
  std::vector<Rational> offsets_;
  unsigned d_;
  std::vector<Node> nodes_;
};

/// One-shot evaluation; builds a PhiEnvelope. Throws for t outside [0,1].
Rational phi_envelope(const Rational& t, const Rational& e, const std::vector<Rational>& offsets, unsigned d,
                      const SearchParams& search);

using EnvelopeSamples = std::vector<std::pair<Rational, Rational>>;

// Validator predicates on (t, value) samples sorted by t.
bool is_nondecreasing(const EnvelopeSamples& samples);
/// value(t2) - value(t1) >= t2 - t1 for consecutive samples.
bool has_unit_slope_growth(const EnvelopeSamples& samples);
bool is_concave(const EnvelopeSamples& samples);

/// Least concave majorant (upper hull) of the samples. Still a lower bound for
/// phi because phi is concave.
EnvelopeSamples concave_majorant(const EnvelopeSamples& samples);

}  // namespace hkb
