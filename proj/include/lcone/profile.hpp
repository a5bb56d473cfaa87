#pragma once

#include <memory>
#include <vector>

#include "lcone/sphere_grid.hpp"

namespace lcone {

/// Finite lightcone parameterised by a positive bounded function on S^{n-1},
/// sampled at grid nodes and read as the piecewise-linear interpolant.
/// `closed` tags the closed-cone variant; it affects only envelope and
/// plumpness operations, never volumes or perimeters.
template <int N>
struct ConeProfile {
  std::shared_ptr<const SphereGrid<N>> grid;
  std::vector<double> values;
  bool closed = false;

  ConeProfile() = default;
  ConeProfile(std::shared_ptr<const SphereGrid<N>> g, std::vector<double> v, bool closed_cone = false);

  double max_value() const;
  double min_value() const;
  double eval(const Vec<N>& dir) const { return grid->interpolate(values, dir); }
};

/// n=2 step profile with exact jump data: value v_k on sector
/// [bounds[k], bounds[k+1]) plus the function value b_k at each boundary
/// angle itself. Envelopes and arrival times account for one-sided limits
/// exactly, with no grid smearing.
struct SectorProfile {
  std::vector<double> bounds;          // strictly increasing in [0, 2pi)
  std::vector<double> sector_values;   // size() == bounds.size()
  std::vector<double> boundary_values; // f(bounds[k])
  bool closed = false;

  SectorProfile() = default;
  SectorProfile(std::vector<double> bounds_, std::vector<double> values_,
                std::vector<double> boundary_values_, bool closed_cone = false);

  int sectors() const { return static_cast<int>(bounds.size()); }
  double max_value() const;
  double min_value() const;
};

template <int N>
double perimeter(const ConeProfile<N>& p);
double perimeter(const SectorProfile& p);

template <int N>
ConeProfile<N> upper_envelope(const ConeProfile<N>& p);
template <int N>
ConeProfile<N> lower_envelope(const ConeProfile<N>& p);
SectorProfile upper_envelope(const SectorProfile& p);
SectorProfile lower_envelope(const SectorProfile& p);

template <int N>
bool is_plump(const ConeProfile<N>& p, double tol = 1e-12);
bool is_plump(const SectorProfile& p, double tol = 1e-12);

/// Lightcone truncated by the spacelike hyperplane eta-orthogonal to the
/// future timelike v at distance l: f = l |v| / (v_t - <v_x, theta>).
template <int N>
ConeProfile<N> cap_profile(const SVec<N>& v, double l, std::shared_ptr<const SphereGrid<N>> grid);

/// Analytic extremal volume 2 omega_n l^{n+1} / (n+1); the single source all
/// other code compares against.
double cap_volume_oracle(int n, double l);

/// Cap radius l with the same perimeter as the given profile value.
inline double matched_cap_radius(int n, double perim) {
  return std::pow(perim / unit_sphere_area(n), 1.0 / (n - 1));
}

template <int N>
ConeProfile<N> scaled(const ConeProfile<N>& p, double c);

/// Sample a sector profile onto a grid (boundary angles that coincide with
/// nodes keep their exact boundary value).
ConeProfile<2> sampled_from_sectors(const SectorProfile& p,
                                    std::shared_ptr<const SphereGrid<2>> grid);

/// sqrt(2) times the Euclidean area of the triangulated boundary graph
/// {(f(theta), f(theta) theta)} in R^{n+1}; equals sqrt(2) n omega_n c^{n-1}
/// for f == c. Compares against the generalised perimeter via
/// perimeter(p) <= euclidean_lateral_area(p)/sqrt(2), equality iff f const.
template <int N>
double euclidean_lateral_area(const ConeProfile<N>& p);
double euclidean_lateral_area(const SectorProfile&);  // rejected: gradient required

}  // namespace lcone
