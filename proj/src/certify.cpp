#include "hkb/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "hkb/bound_engine.hpp"
#include "hkb/simplex_volume.hpp"

namespace hkb {

bool Certificate::recheck() const {
  const Rational again = evaluate_exact(objective, s, t);
  return again == value && verdict == (again > target);
}

Certificate certify_point(const Objective& objective, const Rational& s, const Rational& t, const Rational& target) {
  Rational value = evaluate_exact(objective, s, t);
  const bool verdict = value > target;
  return Certificate{objective, s, t, std::move(value), target, verdict};
}

namespace {

void push_gap(std::vector<CoverageGap>& gaps, std::int64_t e, const std::string& reason) {
  if (!gaps.empty() && gaps.back().e2 + 1 == e && gaps.back().reason == reason) {
    gaps.back().e2 = e;
  } else {
    gaps.push_back(CoverageGap{e, e, reason});
  }
}

}  // namespace

CoveragePlan cover_range(unsigned d, unsigned k, std::int64_t e_lo, std::int64_t e_hi, const Rational& target,
                         const SearchParams& params) {
  if (e_hi < e_lo) throw std::invalid_argument("cover_range needs e_lo <= e_hi");
  params.validate(d);
  CoveragePlan plan{d, k, target, e_lo, e_hi, {}, {}};

  auto attempt = [&](std::int64_t e1, std::int64_t e2) -> std::optional<CoverageInterval> {
    const Objective objective = RangeMinObjective{Rational(static_cast<long>(e1)), Rational(static_cast<long>(e2)), d, k};
    const auto [s, t] = rational_witness(optimize_bound(objective, params), params.max_denominator);
    Certificate cert = certify_point(objective, s, t, target);
    if (!cert.verdict) return std::nullopt;
    const Quadratic q = quadratic_in_e(d, s, t, k);
    if (q.a.sign() > 0) return std::nullopt;
    std::optional<Rational> vertex;
    if (q.a.sign() < 0) vertex = -q.b / (Rational(2) * q.a);
    return CoverageInterval{e1, e2, s, t, cert.value, std::move(vertex), std::move(cert)};
  };

  // H_{e,k} needs mu = e - 2 >= k + 1.
  const auto min_applicable = static_cast<std::int64_t>(k) + 3;

  std::int64_t e1 = e_lo;
  while (e1 <= e_hi) {
    if (e1 < min_applicable) {
      push_gap(plan.gaps, e1, "mu = e - 2 < k + 1: square-root bound not applicable");
      ++e1;
      continue;
    }
    std::optional<CoverageInterval> best = attempt(e1, e1);
    if (!best) {
      push_gap(plan.gaps, e1, "no certified witness for this e");
      ++e1;
      continue;
    }
    // Gallop right until a trial fails or e_hi is reached, then bisect.
    std::int64_t good = e1;
    std::optional<std::int64_t> bad;
    std::int64_t step = 1;
    while (good < e_hi) {
      const std::int64_t cand = std::min(e_hi, good + step);
      if (auto r = attempt(e1, cand)) {
        good = cand;
        best = std::move(r);
        step *= 2;
      } else {
        bad = cand;
        break;
      }
    }
    if (bad) {
      std::int64_t lo = good;
      std::int64_t hi = *bad;
      while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (auto r = attempt(e1, mid)) {
          lo = mid;
          best = std::move(r);
        } else {
          hi = mid;
        }
      }
      good = lo;
    }
    // best always holds the certificate of the last successful trial, which is good.
    plan.intervals.push_back(std::move(*best));
    e1 = good + 1;
  }
  return plan;
}

bool verify_plan(const CoveragePlan& plan) {
  struct Span {
    std::int64_t lo, hi;
  };
  std::vector<Span> spans;
  for (const auto& iv : plan.intervals) spans.push_back({iv.e1, iv.e2});
  for (const auto& g : plan.gaps) spans.push_back({g.e1, g.e2});
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });
  std::int64_t next = plan.e_lo;
  for (const auto& sp : spans) {
    if (sp.lo != next || sp.hi < sp.lo) return false;
    next = sp.hi + 1;
  }
  if (next != plan.e_hi + 1) return false;

  for (const auto& iv : plan.intervals) {
    const Objective expected =
        RangeMinObjective{Rational(static_cast<long>(iv.e1)), Rational(static_cast<long>(iv.e2)), plan.dimension, plan.k};
    const auto* obj = std::get_if<RangeMinObjective>(&iv.certificate.objective);
    const auto* want = std::get_if<RangeMinObjective>(&expected);
    if (!obj || obj->e1 != want->e1 || obj->e2 != want->e2 || obj->d != want->d || obj->k != want->k) return false;
    if (iv.certificate.s != iv.s0 || iv.certificate.t != iv.t0) return false;
    if (iv.certificate.target != plan.target) return false;
    if (!iv.certificate.recheck() || !iv.certificate.verdict) return false;
    if (iv.certified_min != iv.certificate.value || !(iv.certified_min > plan.target)) return false;
    if (quadratic_in_e(plan.dimension, iv.s0, iv.t0, plan.k).a.sign() > 0) return false;
  }
  return true;
}

std::string to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::cited: return "cited";
    case CaseKind::threshold: return "threshold";
    case CaseKind::mu_small: return "mu-small";
    case CaseKind::coverage: return "coverage";
    case CaseKind::gap: return "gap";
  }
  return "unknown";
}

CaseKind case_kind_from_string(const std::string& s) {
  for (CaseKind k : {CaseKind::cited, CaseKind::threshold, CaseKind::mu_small, CaseKind::coverage, CaseKind::gap}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown case kind: " + s);
}

std::string ProofReport::verdict() const {
  const bool open = std::any_of(cases.begin(), cases.end(), [](const CaseEntry& c) { return c.kind == CaseKind::gap; });
  return open ? "open" : "proved";
}

TargetValue default_target(unsigned d) { return d == 7 ? wy_target(7, Rational(3)) : wy_target(d); }

std::string target_note(const TargetValue& target) {
  switch (target.provenance) {
    case TargetProvenance::closed_form_d7:
      return "e_HK of the 7-dimensional quadric at p = " + target.characteristic->str() +
             "; the closed form decreases in p, so exceeding it strictly settles every larger p";
    case TargetProvenance::series: return "1 + m_d, the characteristic-free limit of the quadric values";
    case TargetProvenance::user_supplied: break;
  }
  return "supplied by caller";
}

ProofReport prove_dimension(unsigned d, unsigned k, const SearchParams& params,
                            const std::optional<TargetValue>& target) {
  if (d < 2) throw std::invalid_argument("prove_dimension needs d >= 2");
  if (k == 0) throw std::invalid_argument("prove_dimension needs k >= 1");
  params.validate(d);

  ProofReport report;
  report.dimension = d;
  report.k = k;
  report.target = target ? *target : default_target(d);
  report.target_note = target_note(report.target);
  const Rational& goal = report.target.value;

  const std::string dstr = std::to_string(d);
  report.hypotheses = {
      "R is a complete normal local domain of dimension " + dstr +
          ", characteristic p > 2, algebraically closed residue field, not regular",
      "R is not a complete intersection (the conjecture is known for complete intersections)",
      "2 <= e(R) <= 5: the conjecture is known",
      "e_HK(R) >= e(R)/d! for every R of dimension d",
      "mu(R) <= e(R) - 2 unless R is Cohen-Macaulay of minimal multiplicity (known case)",
      "e_HK(R) >= e(R)(nu_s - mu nu_{s-1}) for all s >= 0",
      "if the k-th square-root extension is the first non-normal one, e_HK(R) >= 1 + 1/2^k",
      "if the square-root extensions are normal, e_HK(R) >= 1 - t/2^k + e(nu_s - (mu-k-1)nu_{s-1} - k nu_{s-1/2} "
      "- nu_{s-t}) for s >= 0, t in [0,1], k < mu",
  };

  report.cases.push_back(CaseEntry{CaseKind::cited, "small multiplicity", {{"e", "2..5"}}, std::nullopt,
                                   "known for 2 <= e(R) <= 5"});
  report.cases.push_back(CaseEntry{CaseKind::cited, "complete intersections", {}, std::nullopt,
                                   "known for complete intersections"});

  const BigInt threshold_big = large_e_threshold(d, goal);
  const auto threshold = static_cast<std::int64_t>(threshold_big.get_si());
  report.threshold = threshold;
  {
    const Objective ratio = MultiplicityRatioObjective{Rational(static_cast<long>(threshold + 1)), d};
    Certificate cert = certify_point(ratio, Rational(0), Rational(0), goal);
    const bool ok = cert.verdict;
    report.cases.push_back(CaseEntry{ok ? CaseKind::threshold : CaseKind::gap,
                                     "large multiplicity",
                                     {{"threshold", std::to_string(threshold)},
                                      {"e", ">= " + std::to_string(threshold + 1)}},
                                     std::move(cert),
                                     "e_HK(R) >= e(R)/d!, increasing in e"});
  }

  constexpr std::int64_t kFirstOpen = 6;
  if (threshold >= kFirstOpen) {
    const unsigned mu_small_max = std::max(3U, k);
    for (unsigned mu = 1; mu <= mu_small_max; ++mu) {
      const Objective obj = MuSmallObjective{Rational(static_cast<long>(kFirstOpen)), mu, d};
      const auto [s, t] = rational_witness(optimize_bound(obj, params), params.max_denominator);
      Certificate cert = certify_point(obj, s, Rational(0), goal);
      const bool ok = cert.verdict;
      // value > goal > 0 at e = 6 makes the bracket positive, so e * bracket only grows with e.
      report.cases.push_back(CaseEntry{ok ? CaseKind::mu_small : CaseKind::gap,
                                       "mu = " + std::to_string(mu),
                                       {{"mu", std::to_string(mu)},
                                        {"e", std::to_string(kFirstOpen) + ".." + std::to_string(threshold)}},
                                       std::move(cert),
                                       "e_HK(R) >= e(R)(nu_s - mu nu_{s-1}); increasing in e once positive"});
    }
  }

  if (threshold >= kFirstOpen) {
    Certificate cert = certify_point(NotNormalObjective{k}, Rational(0), Rational(0), goal);
    const bool ok = cert.verdict;
    report.cases.push_back(CaseEntry{ok ? CaseKind::cited : CaseKind::gap,
                                     "non-normal square-root extension",
                                     {{"k", std::to_string(k)}},
                                     std::move(cert),
                                     "e_HK(R) >= 1 + 1/2^j when S_j is the first non-normal extension, j <= k"});
  }

  if (threshold >= kFirstOpen) {
    CoveragePlan plan = cover_range(d, k, kFirstOpen, threshold, goal, params);
    const std::string mu_lo = std::to_string(std::max(4U, k + 1));
    for (const auto& iv : plan.intervals) {
      report.cases.push_back(CaseEntry{CaseKind::coverage,
                                       "e in [" + std::to_string(iv.e1) + ", " + std::to_string(iv.e2) + "]",
                                       {{"e1", std::to_string(iv.e1)},
                                        {"e2", std::to_string(iv.e2)},
                                        {"mu", mu_lo + "..e-2"}},
                                       iv.certificate,
                                       "square-root bound with mu = e - 2; concave in e"});
    }
    for (const auto& g : plan.gaps) {
      report.cases.push_back(CaseEntry{CaseKind::gap,
                                       "e in [" + std::to_string(g.e1) + ", " + std::to_string(g.e2) + "]",
                                       {{"e1", std::to_string(g.e1)}, {"e2", std::to_string(g.e2)}, {"reason", g.reason}},
                                       std::nullopt,
                                       ""});
    }
    report.coverage = std::move(plan);
  }
  return report;
}

}  // namespace hkb
