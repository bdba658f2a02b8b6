// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "hkb/bound_engine.hpp"
#include "hkb/certify.hpp"
#include "hkb/report.hpp"
#include "hkb/search.hpp"
#include "hkb/series_targets.hpp"
#include "hkb/simplex_volume.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hkb;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }
Rational dec(const char* s) { return Rational::parse(s); }

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.ok && secs > budget_s) {
    c.ok = false;
    c.detail = "over the runtime budget";
  }
  if (!c.ok) ++failures;
  std::printf("%s [%d] %s (%.2f s of %.0f s)%s%s\n", c.ok ? "PASS" : "FAIL", n, title, secs, budget_s,
              c.detail.empty() ? "" : ": ", c.detail.c_str());
  std::fflush(stdout);
}

bool within(const Rational& v, double ref, double tol) { return std::abs(v.to_double() - ref) <= tol; }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "nu equals repeated integration for d = 1..9, 200 random s each", 30, [](Check& c) {
    std::mt19937_64 rng(101);
    for (unsigned d = 1; d <= 9; ++d) {
      for (int i = 0; i < 200; ++i) {
        const Rational s = testutil::random_rational(rng, -1, static_cast<long>(d) + 1);
        c.require(nu_exact(s, d) == oracle::nu_by_integration(s, d),
                  "d = " + std::to_string(d) + ", s = " + s.str());
      }
    }
  });

  criterion(2, "nu symmetry, nu_1 = 1/d!, clamping outside [0, d]", 30, [](Check& c) {
    std::mt19937_64 rng(102);
    for (unsigned d = 1; d <= 9; ++d) {
      const Rational dd(d);
      for (int i = 0; i < 200; ++i) {
        const Rational s = testutil::random_rational(rng, -2, static_cast<long>(d) + 2);
        c.require(nu_exact(s, d) + nu_exact(dd - s, d) == q(1), "symmetry at d = " + std::to_string(d));
      }
      c.require(nu_exact(q(1), d) == Rational(1) / Rational(factorial(d)), "nu_1 at d = " + std::to_string(d));
      for (const Rational& s : {q(-1), q(-1, 3), q(0)}) c.require(nu_exact(s, d) == q(0), "left clamp");
      for (const Rational& s : {dd, dd + q(1, 3), dd + q(5)}) c.require(nu_exact(s, d) == q(1), "right clamp");
    }
  });

  criterion(3, "H_e maxima for e = 6..12 (dimension 7)", 60, [](Check& c) {
    struct Row {
      long e;
      const char* s;
      const char* t;
      double value;
    };
    const Row rows[] = {{6, "2.84243", "0.8", 1.06447},       {7, "2.74118", "0.779643", 1.06056},
                        {8, "2.65255", "0.739206", 1.06024},  {9, "2.58286", "0.710503", 1.06183},
                        {10, "2.52575", "0.688955", 1.06438}, {11, "2.47759", "0.672106", 1.06742},
                        {12, "2.43609", "0.658519", 1.07073}};
    const SearchParams params;
    for (const auto& r : rows) {
      const Rational v = h_bound(q(r.e), 7, dec(r.s), dec(r.t));
      c.require(within(v, r.value, 1e-4), "e = " + std::to_string(r.e) + ": exact " + num(v.to_double()));
      const Candidate best = optimize_bound(HBoundObjective{q(r.e), 7, 1}, params);
      c.require(best.value >= r.value - 1e-4, "e = " + std::to_string(r.e) + ": optimizer " + num(best.value));
    }
  });

  criterion(4, "coverage rows for e in [13, 5340] and an independent greedy covering", 120, [](Check& c) {
    struct Row {
      long e1, e2;
      const char* s0;
      const char* t0;
      double e_max, min_value;
    };
    const Row rows[] = {{13, 19, "2.34", "0.62", 15.973, 1.06843},       {20, 40, "2.12", "0.6", 31.2399, 1.07266},
                        {41, 105, "1.9", "0.55", 72.3972, 1.12153},      {106, 227, "1.75", "0.5", 151.062, 1.20165},
                        {228, 650, "1.6", ".475", 402.416, 1.32149},     {651, 1600, "1.5", "0.45", 937.946, 1.45925},
                        {1601, 5340, "1.375", "0.41", 3891.82, 2.84311}};
    const Rational target = q(71, 67);
    for (const auto& r : rows) {
      const std::string tag = "[" + std::to_string(r.e1) + ", " + std::to_string(r.e2) + "]";
      const Rational vmax = e_max(7, dec(r.s0), dec(r.t0));
      c.require(within(vmax, r.e_max, 1e-3), tag + ": e_max " + num(vmax.to_double()) + " vs printed " + num(r.e_max));
      const Certificate cert = certify_point(RangeMinObjective{q(r.e1), q(r.e2), 7, 1}, dec(r.s0), dec(r.t0), target);
      c.require(within(cert.value, r.min_value, 1e-4), tag + ": min " + num(cert.value.to_double()));
      c.require(cert.verdict && cert.recheck(), tag + ": not certified above 71/67");
    }
    const CoveragePlan plan = cover_range(7, 1, 13, 5340, target, SearchParams{});
    c.require(plan.complete(), "greedy covering has gaps");
    c.require(verify_plan(plan), "greedy covering fails verification");
    c.require(plan.intervals.size() <= 12, "more than 12 intervals");
  });

  criterion(5, "dimension 7 proof via `prove --dim 7 --k 1`", 120, [](Check& c) {
    const Rational target = q(71, 67);
    c.require(within(mu_small_bound(q(6), 1, 7, q(4)), 2.87619, 1e-4), "mu = 1 value");
    c.require(within(mu_small_bound(q(6), 2, 7, dec("3.56745")), 1.84215, 1e-4), "mu = 2 value");
    c.require(within(mu_small_bound(q(6), 3, 7, dec("3.32317")), 1.33532, 1e-4), "mu = 3 value");
    c.require(large_e_threshold(7, target) == 5340, "threshold");

    std::ostringstream out, err;
    const int code = cli::run({"prove", "--dim", "7", "--k", "1", "--json", "-", "--no-timestamp"}, out, err);
    c.require(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
    const std::string text = out.str();
    const ReportDocument doc = parse_document(text.substr(text.find("{\n")));
    c.require(doc.verdict == std::optional<std::string>("proved"), "verdict is not proved");
    const auto& report = std::get<ProofReport>(doc.payload);
    c.require(report.verdict() == "proved", "report verdict");
    c.require(report.threshold == 5340, "report threshold");
    c.require(report.target.value == target, "report target");
    c.require(report.coverage && report.coverage->e_lo == 6 && report.coverage->e_hi == 5340, "coverage range");
    c.require(report.coverage && verify_plan(*report.coverage), "coverage does not re-verify");
    for (const auto& cs : report.cases) {
      c.require(cs.kind != CaseKind::gap, "gap: " + cs.label);
      if (cs.certificate) c.require(cs.certificate->recheck() && cs.certificate->verdict, "recheck: " + cs.label);
    }
  });

  criterion(6, "m_1..m_10 against the series, 1 + m_7 and 1 + m_8", 30, [](Check& c) {
    const auto m = m_coeffs(10);
    const auto series = oracle::sec_plus_tan(10);
    for (unsigned d = 1; d <= 10; ++d) c.require(m[d - 1] == series[d], "m_" + std::to_string(d));
    c.require(q(1) + m[6] == q(332, 315), "1 + m_7");
    c.require(q(1) + m[7] == q(8341, 8064), "1 + m_8");
  });

  criterion(7, "quadric closed form and its identities", 30, [](Check& c) {
    c.require(ehk_quadric_dim7(q(3)) == q(71, 67), "value at p = 3");
    const QuadricIdentities id = verify_quadric_identities();
    c.require(id.decomposition, "decomposition identity");
    c.require(id.derivative && id.derivative_negative_at_3, "derivative identity or sign");
    c.require(id.decreasing, "strict decrease over odd p in [3, 199]");
    c.require(id.above_limit, "above 332/315");
    c.require(within(ehk_quadric_dim7(q(10000)), 332.0 / 315.0, 1e-6), "p = 10^4");
  });

  criterion(8, "surface values at the two highlighted points", 30, [](Check& c) {
    const Rational h7 = h_bound(q(7), 7, dec("2.74118"), dec("0.779643"));
    c.require(within(h7, 1.06056, 1e-4), "H_7 = " + num(h7.to_double()));
    const Rational g8 = general_bound(BoundSpec{8, q(21), 19, 4, {}}, dec("2.17991"), dec("0.706957"));
    c.require(within(g8, 1.03545, 1e-4), "d = 8 value " + num(g8.to_double()));
    c.require(g8 > q(8341, 8064), "d = 8 value not above 8341/8064");
  });

  criterion(9, "dimension 8, k = 4: certified for 21 <= e <= 41705, gaps for 6..20", 600, [](Check& c) {
    const Rational target = q(8341, 8064);
    const auto threshold = large_e_threshold(8, target);
    c.require(threshold == 41705, "threshold");
    const CoveragePlan plan = cover_range(8, 4, 6, threshold.get_si(), target, SearchParams{});
    c.require(verify_plan(plan), "plan does not re-verify");
    std::set<std::int64_t> gap_es;
    for (const auto& g : plan.gaps)
      for (auto e = g.e1; e <= g.e2; ++e) gap_es.insert(e);
    std::set<std::int64_t> expected;
    for (std::int64_t e = 6; e <= 20; ++e) expected.insert(e);
    c.require(gap_es == expected, "gaps are not exactly 6..20");
    c.require(!plan.intervals.empty() && plan.intervals.front().e1 == 21 && plan.intervals.back().e2 == 41705,
              "certified intervals do not span 21..41705");
  });

  criterion(10, "exact property suites and determinism under parallelism", 120, [](Check& c) {
    std::mt19937_64 rng(110);
    std::uniform_int_distribution<unsigned> dim(1, 9), kk(1, 5), extra(0, 6), e_int(1, 60);
    for (int i = 0; i < 300; ++i) {
      const unsigned d = dim(rng);
      const unsigned k = kk(rng);
      const BoundSpec spec{d, q(e_int(rng)), k + 1 + extra(rng), k, {}};
      const Rational s = testutil::random_rational(rng, 0, d + 1);
      const Rational t = testutil::random_rational(rng, 0, 1);
      const Rational g = general_bound(spec, s, t);
      c.require(g == q(1) + (s_bound(spec, s, t) - q(1)) / pow2(k), "rescaling identity");

      const BoundSpec k0{d, spec.e, spec.mu, 0, {}};
      c.require(general_bound(k0, s, t) ==
                    noroots_bound(spec.e, std::vector<Rational>(spec.mu - 1, q(1)), d, EvalPoint(s, q(1), t)),
                "k = 0 consistency");

      BoundSpec more = spec;
      ++more.mu;
      c.require(general_bound(more, s, t) <= g, "monotone in mu");

      const Quadratic quad = quadratic_in_e(d, s, t, k);
      c.require(quad.a <= q(0), "a <= 0");
      for (int j = 0; j < 5; ++j) {
        const Rational e = testutil::random_rational(rng, k + 3, 400);
        c.require(quad(e) == h_bound(e, d, s, t, k), "parabola identity");
      }
    }

    SearchParams one;
    one.threads = 1;
    SearchParams many;
    many.threads = 8;
    const Objective obj = HBoundObjective{q(9), 7, 1};
    c.require(optimize_bound(obj, one) == optimize_bound(obj, many), "optimize_bound depends on threads");
    c.require(cover_range(7, 1, 13, 5340, q(71, 67), one) == cover_range(7, 1, 13, 5340, q(71, 67), many),
              "cover_range depends on threads");
  });

  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
