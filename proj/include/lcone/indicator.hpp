#pragma once

#include <cstdint>

#include "lcone/arrival.hpp"

namespace lcone {

/// Axis-aligned spacetime box with a regular cell grid and boolean occupancy.
/// N is the spatial dimension; the box lives in R^{N+1}.
template <int N>
struct IndicatorRegion {
  double t_lo = 0.0, t_hi = 1.0;
  Vec<N> x_lo{}, x_hi{};
  int nt = 0;
  std::array<int, N> nx{};
  std::vector<std::uint8_t> occ;

  IndicatorRegion() = default;
  IndicatorRegion(double t0, double t1, const Vec<N>& xlo, const Vec<N>& xhi, int cells_t,
                  const std::array<int, N>& cells_x);

  std::int64_t cell_count() const;
  double cell_volume() const;
  double volume() const { return occupied_cells() * cell_volume(); }
  std::int64_t occupied_cells() const;

  std::int64_t index(int it, const std::array<int, N>& ix) const;
  SVec<N> center(int it, const std::array<int, N>& ix) const;

  /// Occupancy at an arbitrary point by nearest-cell lookup; false outside.
  bool at(const SVec<N>& p) const;
  bool inside_box(const SVec<N>& p) const;
};

/// Lorentz polarisation cell by cell: plus side takes OR with the reflected
/// occupancy, minus side AND, on-cells keep their value. Reflections of
/// occupied cells must stay inside the box.
template <int N>
IndicatorRegion<N> polarize_indicator(const IndicatorRegion<N>& s, const ReflectionPlane<N>& plane);

template <int N>
double symdiff_volume(const IndicatorRegion<N>& a, const IndicatorRegion<N>& b);

/// Volume of the one-cell-thick layer around the occupancy interface, the
/// tolerance unit for the cell-level conservation and contraction checks.
template <int N>
double boundary_layer_volume(const IndicatorRegion<N>& s);

/// a subset of b up to one cell layer: every occupied cell of a has an
/// occupied cell of b within Chebyshev distance `layers`.
template <int N>
bool contained_up_to_layer(const IndicatorRegion<N>& a, const IndicatorRegion<N>& b,
                           int layers = 1);

/// Rasterise the domain of dependence of a cone profile: cell occupied iff
/// its centre satisfies |x| <= t < u(x).
template <int N>
IndicatorRegion<N> rasterize_dod(const ConeProfile<N>& p, const IndicatorRegion<N>& box_spec);

}  // namespace lcone
