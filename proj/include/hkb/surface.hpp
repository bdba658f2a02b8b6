#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "hkb/search.hpp"

namespace hkb {

/// Values of a bound on an evenly spaced (s, t) grid. values is row-major
/// with one row per s value. The grid coincides with the optimizer's coarse
/// scan at the same resolution.
struct SurfaceGrid {
  Objective objective;
  std::vector<double> s_values;
  std::vector<double> t_values;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[i * t_values.size() + j]; }
  /// Best cell under the search tie-break.
  Candidate max_cell() const;

  bool operator==(const SurfaceGrid&) const = default;
};

SurfaceGrid surface_grid(const Objective& objective, unsigned s_count, unsigned t_count, double s_lo, double s_hi,
                         double t_lo, double t_hi);

/// Long format: header "s,t,value", one line per cell.
void write_surface_csv(const SurfaceGrid& grid, std::ostream& os);

/// Heatmap with one rect per cell; cell edges where the surface crosses
/// target_level are drawn as a contour.
void write_surface_svg(const SurfaceGrid& grid, std::ostream& os, std::optional<double> target_level);

}  // namespace hkb
