#include "hkb/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hkb/simplex_volume.hpp"

namespace hkb {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

unsigned worker_count(unsigned requested, unsigned rows) {
  unsigned n = requested == 0 ? std::thread::hardware_concurrency() : requested;
  return std::clamp(n, 1U, std::max(1U, rows));
}

// Evaluates f over the grid and returns the best cell. Rows are split across
// threads; the reduction is sequential in row-major order so the result is
// independent of the thread count.
Candidate scan(const std::function<double(double, double)>& f, double s_lo, double s_hi, unsigned ns, double t_lo,
               double t_hi, unsigned nt, unsigned threads) {
  if (s_lo == s_hi) ns = 1;
  if (t_lo == t_hi) nt = 1;
  std::vector<double> values(static_cast<std::size_t>(ns) * nt);
  auto fill_rows = [&](unsigned begin, unsigned end) {
    for (unsigned i = begin; i < end; ++i) {
      const double s = grid_coordinate(s_lo, s_hi, i, ns);
      for (unsigned j = 0; j < nt; ++j) values[static_cast<std::size_t>(i) * nt + j] = f(s, grid_coordinate(t_lo, t_hi, j, nt));
    }
  };

  const unsigned workers = worker_count(threads, ns);
  if (workers == 1) {
    fill_rows(0, ns);
  } else {
    std::vector<std::jthread> pool;
    const unsigned chunk = (ns + workers - 1) / workers;
    for (unsigned begin = 0; begin < ns; begin += chunk) pool.emplace_back(fill_rows, begin, std::min(ns, begin + chunk));
  }

  Candidate best{s_lo, t_lo, -INFINITY};
  bool first = true;
  for (unsigned i = 0; i < ns; ++i) {
    for (unsigned j = 0; j < nt; ++j) {
      const Candidate c{grid_coordinate(s_lo, s_hi, i, ns), grid_coordinate(t_lo, t_hi, j, nt),
                        values[static_cast<std::size_t>(i) * nt + j]};
      if (first || better_candidate(c, best)) {
        best = c;
        first = false;
      }
    }
  }
  return best;
}

}  // namespace

void SearchParams::validate(unsigned d) const {
  const auto [lo, hi] = s_range(d);
  if (hi < lo) throw std::invalid_argument("empty s range");
  if (t_hi < t_lo) throw std::invalid_argument("empty t range");
  if (t_lo.sign() < 0 || t_hi > Rational(1)) throw std::invalid_argument("t range must lie in [0,1]");
  if (lo.sign() < 0) throw std::invalid_argument("s range must lie in [0, inf)");
  if (s_count < 2 || t_count < 2) throw std::invalid_argument("grid counts must be >= 2");
  if (max_denominator == 0) throw std::invalid_argument("max denominator must be positive");
}

std::pair<Rational, Rational> SearchParams::s_range(unsigned d) const {
  return {s_lo.value_or(Rational(0)), s_hi.value_or(Rational(d + 1))};
}

unsigned objective_dimension(const Objective& objective) {
  return std::visit(overloaded{
                        [](const HBoundObjective& o) { return o.d; },
                        [](const GeneralBoundObjective& o) { return o.spec.dimension; },
                        [](const RangeMinObjective& o) { return o.d; },
                        [](const MuSmallObjective& o) { return o.d; },
                        [](const NotNormalObjective&) { return 1U; },
                        [](const MultiplicityRatioObjective& o) { return o.d; },
                    },
                    objective);
}

std::string objective_kind(const Objective& objective) {
  return std::visit(overloaded{
                        [](const HBoundObjective&) { return std::string("h_bound"); },
                        [](const GeneralBoundObjective&) { return std::string("general_bound"); },
                        [](const RangeMinObjective&) { return std::string("range_min"); },
                        [](const MuSmallObjective&) { return std::string("mu_small_bound"); },
                        [](const NotNormalObjective&) { return std::string("not_normal_bound"); },
                        [](const MultiplicityRatioObjective&) { return std::string("multiplicity_ratio"); },
                    },
                    objective);
}

bool objective_ignores_t(const Objective& objective) {
  return std::holds_alternative<MuSmallObjective>(objective) ||
         std::holds_alternative<NotNormalObjective>(objective) ||
         std::holds_alternative<MultiplicityRatioObjective>(objective);
}

double evaluate_float(const Objective& objective, double s, double t) {
  return std::visit(
      overloaded{
          [&](const HBoundObjective& o) { return h_bound_float(o.e.to_double(), o.d, s, t, o.k); },
          [&](const GeneralBoundObjective& o) { return general_bound_float(o.spec, s, t); },
          [&](const RangeMinObjective& o) {
            // Both parabolas share the four nu values.
            const double kd = o.k;
            const double n_s = nu_float(s, o.d);
            const double n_1 = nu_float(s - 1.0, o.d);
            const double n_h = nu_float(s - 0.5, o.d);
            const double n_t = nu_float(s - t, o.d);
            const double a = -n_1;
            const double b = n_s + (kd + 3.0) * n_1 - kd * n_h - n_t;
            const double c = 1.0 - std::ldexp(t, -static_cast<int>(o.k));
            const double e1 = o.e1.to_double();
            const double e2 = o.e2.to_double();
            return std::min((a * e1 + b) * e1 + c, (a * e2 + b) * e2 + c);
          },
          [&](const MuSmallObjective& o) { return mu_small_bound_float(o.e.to_double(), o.mu, o.d, s); },
          [&](const NotNormalObjective& o) { return not_normal_bound(o.k).to_double(); },
          [&](const MultiplicityRatioObjective& o) { return (o.e / Rational(factorial(o.d))).to_double(); },
      },
      objective);
}

Rational evaluate_exact(const Objective& objective, const Rational& s, const Rational& t) {
  return std::visit(overloaded{
                        [&](const HBoundObjective& o) { return h_bound(o.e, o.d, s, t, o.k); },
                        [&](const GeneralBoundObjective& o) { return general_bound(o.spec, s, t); },
                        [&](const RangeMinObjective& o) { return range_min(o.d, o.e1, o.e2, s, t, o.k); },
                        [&](const MuSmallObjective& o) { return mu_small_bound(o.e, o.mu, o.d, s); },
                        [&](const NotNormalObjective& o) { return not_normal_bound(o.k); },
                        [&](const MultiplicityRatioObjective& o) { return o.e / Rational(factorial(o.d)); },
                    },
                    objective);
}

Rational rationalize(double x, std::uint64_t max_denominator) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
  if (max_denominator == 0) throw std::invalid_argument("max denominator must be positive");
  const Rational target = Rational::from_double(x);
  const BigInt limit(std::to_string(max_denominator));

  // Convergents h/k with h_{-2}/k_{-2} = 0/1 and h_{-1}/k_{-1} = 1/0.
  BigInt h_prev = 0, k_prev = 1, h = 1, k = 0;
  Rational rest = target;
  while (true) {
    const BigInt a = rest.floor();
    const BigInt k_next = a * k + k_prev;
    if (k_next > limit) {
      // Largest admissible semiconvergent versus the last convergent.
      const BigInt m = (limit - k_prev) / k;
      const Rational semi(BigInt(m * h + h_prev), BigInt(m * k + k_prev));
      const Rational conv(h, k);
      return (semi - target).abs() < (conv - target).abs() ? semi : conv;
    }
    const BigInt h_next = a * h + h_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    const Rational frac = rest - Rational(a);
    if (frac.sign() == 0) return Rational(h, k);
    rest = Rational(1) / frac;
  }
}

double grid_coordinate(double lo, double hi, unsigned i, unsigned n) {
  if (n <= 1 || i == 0) return lo;
  if (i == n - 1) return hi;
  return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

bool better_candidate(const Candidate& a, const Candidate& b) {
  if (std::isnan(a.value)) return false;
  if (std::isnan(b.value)) return true;
  if (a.value != b.value) return a.value > b.value;
  if (a.s != b.s) return a.s < b.s;
  return a.t < b.t;
}

Candidate optimize_grid(const std::function<double(double, double)>& f, double s_lo, double s_hi, double t_lo,
                        double t_hi, const SearchParams& params) {
  Candidate best = scan(f, s_lo, s_hi, params.s_count, t_lo, t_hi, params.t_count, params.threads);
  double s_width = s_hi - s_lo;
  double t_width = t_hi - t_lo;
  for (unsigned round = 0; round < params.rounds; ++round) {
    s_width /= 5.0;
    t_width /= 5.0;
    const double bs_lo = std::max(s_lo, best.s - 0.5 * s_width);
    const double bs_hi = std::min(s_hi, best.s + 0.5 * s_width);
    const double bt_lo = std::max(t_lo, best.t - 0.5 * t_width);
    const double bt_hi = std::min(t_hi, best.t + 0.5 * t_width);
    const Candidate c = scan(f, bs_lo, bs_hi, params.s_count, bt_lo, bt_hi, params.t_count, params.threads);
    if (better_candidate(c, best)) best = c;
  }
  return best;
}

Candidate optimize_bound(const Objective& objective, const SearchParams& params) {
  const unsigned d = objective_dimension(objective);
  params.validate(d);
  const auto [s_lo, s_hi] = params.s_range(d);
  Rational t_lo = params.t_lo;
  Rational t_hi = objective_ignores_t(objective) ? params.t_lo : params.t_hi;

  const Candidate raw = optimize_grid([&](double s, double t) { return evaluate_float(objective, s, t); },
                                      s_lo.to_double(), s_hi.to_double(), t_lo.to_double(), t_hi.to_double(),
                                      params);

  auto [s, t] = rational_witness(raw, params.max_denominator);
  s = std::clamp(s, s_lo, s_hi);
  t = std::clamp(t, t_lo, t_hi);
  const double sd = s.to_double();
  const double td = t.to_double();
  return Candidate{sd, td, evaluate_float(objective, sd, td)};
}

std::pair<Rational, Rational> rational_witness(const Candidate& c, std::uint64_t max_denominator) {
  return {rationalize(c.s, max_denominator), rationalize(c.t, max_denominator)};
}

}  // namespace hkb
