#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkb/rational.hpp"
#include "hkb/search.hpp"
#include "hkb/series_targets.hpp"

namespace hkb {

/// An exact witness that an objective exceeds a target at a rational point.
/// Self-contained: recheck() re-evaluates from the stored fields alone.
struct Certificate {
  Objective objective;
  Rational s;
  Rational t;
  Rational value;
  Rational target;
  bool verdict = false;  // value > target, decided exactly

  bool recheck() const;

  bool operator==(const Certificate&) const = default;
};

Certificate certify_point(const Objective& objective, const Rational& s, const Rational& t, const Rational& target);

struct CoverageInterval {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  Rational s0;
  Rational t0;
  Rational certified_min;
  /// Vertex of the parabola in e at (s0, t0); absent when it is linear in e.
  std::optional<Rational> e_max;
  Certificate certificate;

  bool operator==(const CoverageInterval&) const = default;
};

struct CoverageGap {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  std::string reason;

  bool operator==(const CoverageGap&) const = default;
};

/// Contiguous certified ranges of e (plus gaps) tiling [e_lo, e_hi], with
/// mu = e - 2 throughout.
struct CoveragePlan {
  unsigned dimension = 7;
  unsigned k = 1;
  Rational target;
  std::int64_t e_lo = 0;
  std::int64_t e_hi = -1;
  std::vector<CoverageInterval> intervals;
  std::vector<CoverageGap> gaps;

  bool complete() const { return gaps.empty(); }

  bool operator==(const CoveragePlan&) const = default;
};

/// Greedy covering: from the current left end e1, the largest e2 for which
/// min(H_{e1}, H_{e2}) can be certified above the target (galloping, then
/// bisection; each trial optimizes min(H_{e1}, H_{e2}) and certifies it
/// exactly). Values of e where even e2 = e1 fails become gaps.
CoveragePlan cover_range(unsigned d, unsigned k, std::int64_t e_lo, std::int64_t e_hi, const Rational& target,
                         const SearchParams& params);

/// Exact re-verification: intervals and gaps tile [e_lo, e_hi], every
/// certificate rechecks, certified_min > target and the parabola opens
/// downward at each (s0, t0).
bool verify_plan(const CoveragePlan& plan);

enum class CaseKind { cited, threshold, mu_small, coverage, gap };

std::string to_string(CaseKind kind);
CaseKind case_kind_from_string(const std::string& s);

struct CaseEntry {
  CaseKind kind = CaseKind::cited;
  std::string label;
  std::map<std::string, std::string> parameters;
  std::optional<Certificate> certificate;
  /// Cited result this case rests on.
  std::string citation;

  bool operator==(const CaseEntry&) const = default;
};

struct ProofReport {
  unsigned dimension = 7;
  unsigned k = 1;
  TargetValue target;
  std::string target_note;
  std::int64_t threshold = 0;
  std::vector<std::string> hypotheses;
  std::vector<CaseEntry> cases;
  std::optional<CoveragePlan> coverage;

  /// "proved" iff no gap entries, otherwise "open".
  std::string verdict() const;

  bool operator==(const ProofReport&) const = default;
};

/// The quadric value at p = 3 for d = 7 (it dominates every p >= 3), else 1 + m_d.
TargetValue default_target(unsigned d);
std::string target_note(const TargetValue& target);

/// Runs the case ladder for one dimension: cited small-e cases, the e/d!
/// threshold, small-mu bounds, the non-normal branch and the coverage of
/// [6, threshold]. The last three only run when the threshold is at least 6.
/// Gaps are reported, never thrown.
ProofReport prove_dimension(unsigned d, unsigned k, const SearchParams& params,
                            const std::optional<TargetValue>& target = std::nullopt);

}  // namespace hkb
