#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "hkb/bound_engine.hpp"
#include "hkb/rational.hpp"

namespace hkb {

struct SearchParams {
  /// s range; unset means [0, d + 1] for the objective's dimension.
  std::optional<Rational> s_lo;
  std::optional<Rational> s_hi;
  Rational t_lo = 0;
  Rational t_hi = 1;
  unsigned s_count = 200;
  unsigned t_count = 100;
  unsigned rounds = 3;
  std::uint64_t max_denominator = 1'000'000;
  /// Worker threads for grid evaluation; 0 picks hardware concurrency.
  /// Results do not depend on this value.
  unsigned threads = 0;

  /// Throws std::invalid_argument on empty ranges or grid counts < 2.
  void validate(unsigned d) const;
  std::pair<Rational, Rational> s_range(unsigned d) const;
};

struct Candidate {
  double s = 0.0;
  double t = 0.0;
  double value = 0.0;

  bool operator==(const Candidate&) const = default;
};

// Objectives: the bound being maximized, with everything but (s, t) fixed.

struct HBoundObjective {
  Rational e;
  unsigned d = 7;
  unsigned k = 1;

  bool operator==(const HBoundObjective&) const = default;
};

struct GeneralBoundObjective {
  BoundSpec spec;

  bool operator==(const GeneralBoundObjective&) const = default;
};

/// min(H_{e1}, H_{e2}); certifies the whole range [e1, e2].
struct RangeMinObjective {
  Rational e1;
  Rational e2;
  unsigned d = 7;
  unsigned k = 1;

  bool operator==(const RangeMinObjective&) const = default;
};

/// e (nu_s - mu nu_{s-1}); independent of t.
struct MuSmallObjective {
  Rational e;
  unsigned mu = 1;
  unsigned d = 7;

  bool operator==(const MuSmallObjective&) const = default;
};

/// 1 + 1/2^k; independent of (s, t).
struct NotNormalObjective {
  unsigned k = 1;

  bool operator==(const NotNormalObjective&) const = default;
};

/// e / d!; independent of (s, t).
struct MultiplicityRatioObjective {
  Rational e;
  unsigned d = 7;

  bool operator==(const MultiplicityRatioObjective&) const = default;
};

using Objective = std::variant<HBoundObjective, GeneralBoundObjective, RangeMinObjective, MuSmallObjective,
                               NotNormalObjective, MultiplicityRatioObjective>;

unsigned objective_dimension(const Objective& objective);
/// Short kind tag, e.g. "h_bound".
std::string objective_kind(const Objective& objective);
/// True when the objective does not depend on t (the search pins t).
bool objective_ignores_t(const Objective& objective);

double evaluate_float(const Objective& objective, double s, double t);
Rational evaluate_exact(const Objective& objective, const Rational& s, const Rational& t);

/// Best rational approximation with denominator <= max_denominator (continued
/// fractions with semiconvergents), computed from the exact binary value of x.
/// Throws std::invalid_argument for non-finite x or max_denominator = 0.
Rational rationalize(double x, std::uint64_t max_denominator);

/// i-th of n evenly spaced points on [lo, hi]; the endpoints are exact.
double grid_coordinate(double lo, double hi, unsigned i, unsigned n);

/// Lexicographic order used everywhere in the search: larger value first,
/// then smaller s, then smaller t. NaN values lose to everything.
bool better_candidate(const Candidate& a, const Candidate& b);

/// Coarse grid scan over [s_lo, s_hi] x [t_lo, t_hi] followed by params.rounds
/// refinement rounds, each rescanning a box 1/5 the size of the previous one
/// centred on the incumbent (clipped to the range).
Candidate optimize_grid(const std::function<double(double, double)>& f, double s_lo, double s_hi, double t_lo,
                        double t_hi, const SearchParams& params);

/// optimize_grid on the objective, then snaps the witness to rationals with
/// params.max_denominator and re-evaluates there, so the returned value
/// belongs to the returned (rational) point.
Candidate optimize_bound(const Objective& objective, const SearchParams& params);

/// The rational witness behind a candidate returned by optimize_bound.
std::pair<Rational, Rational> rational_witness(const Candidate& c, std::uint64_t max_denominator);

}  // namespace hkb
