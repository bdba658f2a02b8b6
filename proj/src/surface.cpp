#include "hkb/surface.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hkb {

Candidate SurfaceGrid::max_cell() const {
  Candidate best{s_values.front(), t_values.front(), at(0, 0)};
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    for (std::size_t j = 0; j < t_values.size(); ++j) {
      const Candidate c{s_values[i], t_values[j], at(i, j)};
      if (better_candidate(c, best)) best = c;
    }
  }
  return best;
}

SurfaceGrid surface_grid(const Objective& objective, unsigned s_count, unsigned t_count, double s_lo, double s_hi,
                         double t_lo, double t_hi) {
  if (s_count < 2 || t_count < 2) throw std::invalid_argument("surface grid needs at least 2x2 cells");
  if (s_hi < s_lo || t_hi < t_lo) throw std::invalid_argument("empty surface range");
  SurfaceGrid g{objective, {}, {}, {}};
  for (unsigned i = 0; i < s_count; ++i) g.s_values.push_back(grid_coordinate(s_lo, s_hi, i, s_count));
  for (unsigned j = 0; j < t_count; ++j) g.t_values.push_back(grid_coordinate(t_lo, t_hi, j, t_count));
  g.values.reserve(static_cast<std::size_t>(s_count) * t_count);
  for (double s : g.s_values) {
    for (double t : g.t_values) g.values.push_back(evaluate_float(objective, s, t));
  }
  return g;
}

void write_surface_csv(const SurfaceGrid& grid, std::ostream& os) {
  os << "s,t,value\n";
  char buf[96];
  for (std::size_t i = 0; i < grid.s_values.size(); ++i) {
    for (std::size_t j = 0; j < grid.t_values.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid.s_values[i], grid.t_values[j], grid.at(i, j));
      os << buf;
    }
  }
}

namespace {

// Dark blue -> teal -> yellow.
std::string heat_color(double x) {
  static constexpr std::array<std::array<double, 3>, 3> stops{{{33, 25, 110}, {33, 145, 140}, {250, 230, 35}}};
  x = std::clamp(x, 0.0, 1.0);
  const double pos = x * 2.0;
  const auto idx = std::min<std::size_t>(1, static_cast<std::size_t>(pos));
  const double f = pos - static_cast<double>(idx);
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(stops[idx][0] + f * (stops[idx + 1][0] - stops[idx][0])),
                static_cast<int>(stops[idx][1] + f * (stops[idx + 1][1] - stops[idx][1])),
                static_cast<int>(stops[idx][2] + f * (stops[idx + 1][2] - stops[idx][2])));
  return buf;
}

}  // namespace

void write_surface_svg(const SurfaceGrid& grid, std::ostream& os, std::optional<double> target_level) {
  const std::size_t ns = grid.s_values.size();
  const std::size_t nt = grid.t_values.size();
  constexpr double kCell = 4.0;
  constexpr double kMargin = 40.0;
  const double width = static_cast<double>(ns) * kCell;
  const double height = static_cast<double>(nt) * kCell;

  // Truncate the colour scale below the interesting band, as the surface
  // plunges far below 1 away from the maximum.
  const double vmax = grid.max_cell().value;
  double vmin = *std::min_element(grid.values.begin(), grid.values.end());
  const double band = target_level ? std::max(vmax - *target_level, 0.01) : std::max(vmax - vmin, 1e-12) / 4.0;
  vmin = std::max(vmin, vmax - 4.0 * band);
  const double span = std::max(vmax - vmin, 1e-300);

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 2 * kMargin << "\" height=\""
     << height + 2 * kMargin << "\">\n";
  os << "<g transform=\"translate(" << kMargin << "," << kMargin << ")\" shape-rendering=\"crispEdges\">\n";
  // Row j = 0 (smallest t) at the bottom.
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      os << "<rect x=\"" << static_cast<double>(i) * kCell << "\" y=\"" << height - static_cast<double>(j + 1) * kCell
         << "\" width=\"" << kCell << "\" height=\"" << kCell << "\" fill=\"" << heat_color((grid.at(i, j) - vmin) / span)
         << "\"/>\n";
    }
  }
  if (target_level) {
    const double level = *target_level;
    os << "<g stroke=\"#e0301e\" stroke-width=\"1.5\">\n";
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t j = 0; j < nt; ++j) {
        const bool above = grid.at(i, j) > level;
        const double x = static_cast<double>(i) * kCell;
        const double y = height - static_cast<double>(j + 1) * kCell;
        if (i + 1 < ns && above != (grid.at(i + 1, j) > level)) {
          os << "<line x1=\"" << x + kCell << "\" y1=\"" << y << "\" x2=\"" << x + kCell << "\" y2=\"" << y + kCell
             << "\"/>\n";
        }
        if (j + 1 < nt && above != (grid.at(i, j + 1) > level)) {
          os << "<line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << x + kCell << "\" y2=\"" << y << "\"/>\n";
        }
      }
    }
    os << "</g>\n";
  }
  os << "</g>\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "s in [%g, %g], t in [%g, %g], max %.6f", grid.s_values.front(), grid.s_values.back(),
                grid.t_values.front(), grid.t_values.back(), vmax);
  os << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 12 << "\" font-family=\"sans-serif\" font-size=\"12\">" << buf;
  if (target_level) os << ", target level " << *target_level;
  os << "</text>\n</svg>\n";
}

}  // namespace hkb
