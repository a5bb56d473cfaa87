#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "lcone/vec.hpp"

namespace lcone {

/// Point of the unit hyperboloid S_{-1} in geodesic polar coordinates:
/// (cosh s, sinh s * dir).
template <int N>
SVec<N> hyp_point(double s, const Vec<N>& dir);

/// Geodesic distance arccosh(-eta(p,q)); both points must satisfy
/// eta(p,p) = -1 within tolerance.
template <int N>
double hyp_distance(const SVec<N>& p, const SVec<N>& q, double tol = 1e-8);

/// |B_delta| = n omega_n int_0^delta sinh^{n-1} and P(B_delta) = n omega_n sinh^{n-1} delta.
double hyp_ball_volume(int n, double delta);
double hyp_ball_perimeter(int n, double delta);
/// Radius with hyp_ball_volume(n, r) = volume, by bisection.
double hyp_ball_radius_for_volume(int n, double volume);

/// |D(B_delta)|: the causal diamond over a geodesic ball,
/// 2 omega_n sinh^{n+1}(delta) / (n+1). Re-derived against direct quadrature
/// in the test suite before use as an oracle.
double hyp_diamond_volume_oracle(int n, double delta);

/// Claim-1 style upper bound on |D(E)| from |E| alone.
double claim1_bound(double volume, int n);

template <int N>
struct GeodesicBall {
  SVec<N> center;
  double radius;
};

/// Occupancy on a geodesic-polar (s, theta) grid around e0, n=2 only.
/// Cell weight sinh(s_c) ds dtheta.
struct PolarGridIndicator {
  int ns = 0, ntheta = 0;
  double s_max = 0.0;
  std::vector<std::uint8_t> occ;  // row-major [is][itheta]

  PolarGridIndicator() = default;
  PolarGridIndicator(int ns_, int ntheta_, double smax);
  double ds() const { return s_max / ns; }
  double dtheta() const { return 2.0 * kPi / ntheta; }
  double cell_weight(int is) const { return std::sinh((is + 0.5) * ds()) * ds() * dtheta(); }
  std::size_t index(int is, int it) const { return static_cast<std::size_t>(is) * ntheta + it; }
  double area() const;
  bool at_point(const SVec<2>& p) const;  // nearest-cell lookup, false beyond s_max
};

/// Region of S_{-1}: finite union of geodesic balls, or a grid indicator.
template <int N>
struct HyperbolicSet {
  std::variant<std::vector<GeodesicBall<N>>, PolarGridIndicator> rep;

  bool is_ball_union() const { return rep.index() == 0; }
  const std::vector<GeodesicBall<N>>& balls() const { return std::get<0>(rep); }
  const PolarGridIndicator& grid() const { return std::get<1>(rep); }
  bool contains(const SVec<N>& p) const;
  bool empty() const;
  /// Largest geodesic distance from e0 to the set (bounding radius).
  double support_radius() const;
};

template <int N>
HyperbolicSet<N> make_ball_union(std::vector<GeodesicBall<N>> balls);
HyperbolicSet<2> make_grid_set(PolarGridIndicator grid);

/// Hyperbolic area; ball unions must be disjoint after dropping nested balls.
template <int N>
double hyp_volume(const HyperbolicSet<N>& E);

/// Perimeter, available for disjoint ball unions only.
template <int N>
double hyp_perimeter(const HyperbolicSet<N>& E);

struct HypVolumeOptions {
  int spatial_cells = 128;  // per spatial axis
  int trace_dirs = 128;     // directions for the cone-trace membership test
  double bisect_tol = 1e-6;
  double box_pad = 1.05;
};

/// Arrival fields of D(E): u_plus by bisection above sqrt(1+|x|^2) (past
/// cone trace inside E), u_minus symmetrically below (future cone trace).
template <int N>
double hyp_u_plus(const HyperbolicSet<N>& E, const Vec<N>& x, const HypVolumeOptions& opts = {});
template <int N>
double hyp_u_minus(const HyperbolicSet<N>& E, const Vec<N>& x, const HypVolumeOptions& opts = {});

/// |D(E)| = integral of max(u_plus - u_minus, 0) over the spatial box.
template <int N>
double hyp_dod_volume(const HyperbolicSet<N>& E, const HypVolumeOptions& opts = {});

struct HypIsoperimetricResult {
  double lhs;    // |D(E)| / (2 omega_n/(n+1))
  double rhs;    // (P(E)/(n omega_n))^{(n+1)/(n-1)}
  double ratio;  // lhs / rhs
};

template <int N>
HypIsoperimetricResult hyp_isoperimetric_check(const HyperbolicSet<N>& E,
                                               const HypVolumeOptions& opts = {});

/// Polarisation restricted to the hyperboloid, on grid indicators: cellwise
/// OR on the plus side of the plane, AND on the minus side.
HyperbolicSet<2> hyp_polarize(const HyperbolicSet<2>& E, const ReflectionPlane<2>& plane);

}  // namespace lcone
