#pragma once

#include <functional>
#include <variant>

#include "lcone/arrival.hpp"
#include "lcone/hyperboloid.hpp"

namespace lcone {

struct AllMask {};
template <int N>
struct DiskMask {
  Vec<N> center{};
  double radius = 1.0;
};
template <int N>
struct PredicateMask {
  std::function<bool(const Vec<N>&)> inside;
  int subsamples = 4;
};
template <int N>
using Mask = std::variant<AllMask, DiskMask<N>, PredicateMask<N>>;

/// Fraction of the axis-aligned cell [lo, hi] covered by the mask, times the
/// cell volume. Disk masks are exact for N = 2 (Green's theorem on the
/// rectangle boundary), subsampled otherwise.
template <int N>
double mask_coverage(const Mask<N>& mask, const Vec<N>& lo, const Vec<N>& hi);

/// Area of {x^2 + y^2 <= r^2} intersected with a ccw rectangle.
double circle_rect_overlap(double cx, double cy, double r, double x0, double x1, double y0,
                           double y1);

template <int N>
bool mask_contains(const Mask<N>& mask, const Vec<N>& p);

/// 1-Lipschitz height graph nu(x) over a uniform node lattice on [lo, hi]^N.
template <int N>
struct FlatGraph {
  Vec<N> lo{}, hi{};
  std::array<int, N> nodes{};  // nodes per axis, >= 2
  std::vector<double> values;  // row-major
  Mask<N> mask = AllMask{};

  FlatGraph() = default;
  FlatGraph(const Vec<N>& lo_, const Vec<N>& hi_, const std::array<int, N>& nodes_);

  double spacing(int axis) const { return (hi[axis] - lo[axis]) / (nodes[axis] - 1); }
  std::size_t index(const std::array<int, N>& ix) const;
  Vec<N> point(const std::array<int, N>& ix) const;
  double& at(const std::array<int, N>& ix) { return values[index(ix)]; }
  double at(const std::array<int, N>& ix) const { return values[index(ix)]; }

  /// Lipschitz check on axis-adjacent pairs.
  void validate_lipschitz(double tol = 1e-9) const;
};

/// Lorentzian area int sqrt(1 - |grad nu|^2) over the masked region;
/// central-difference gradients, |grad nu| in [1, 1+1e-9] clamps to 1,
/// larger values raise.
template <int N>
double area_flat(const FlatGraph<N>& g, const Mask<N>& mask);
template <int N>
double area_flat(const FlatGraph<N>& g) {
  return area_flat(g, g.mask);
}

/// Euclidean polarisation of the height function about the spatial mirror
/// {x^1 = 0}: max toward the chosen side, min on the other, mirror fixed.
/// Requires a lattice symmetric in x^1. Area is preserved up to grid error.
template <int N>
FlatGraph<N> polarize_graph(const FlatGraph<N>& g, Side toward);

/// Null extension: nu_ext(x) = max(|x|, min_p (nu(p) + |x - x_p|)) over the
/// masked nodes of g, on a fresh lattice over [-R, R]^N. Requires nu >= |x|
/// on the masked domain.
template <int N>
FlatGraph<N> null_extension(const FlatGraph<N>& g, double box_radius, int out_nodes);

namespace detail {
/// Unpruned reference for null_extension, for the oracle test.
template <int N>
FlatGraph<N> null_extension_bruteforce(const FlatGraph<N>& g, double box_radius, int out_nodes);
}  // namespace detail

// ---------------------------------------------------------------------------
// hyperbolic chart
// ---------------------------------------------------------------------------

/// Graph l = f(s, theta) over the unit hyperboloid in geodesic polar
/// coordinates, axisymmetric for dim = 3 (theta is then the polar angle in
/// [0, pi]). Constraint |d log f|^2_m <= 1.
struct HypGraph {
  int dim = 2;  // spatial dimension n
  int ns = 0, ntheta = 0;
  double s_max = 10.0;
  std::vector<double> f;  // row-major [is][itheta], is = 0 .. ns (s inclusive)

  HypGraph() = default;
  HypGraph(int dim_, int ns_, int ntheta_, double smax);
  double ds() const { return s_max / ns; }
  double dtheta() const { return dim == 2 ? 2.0 * kPi / ntheta : kPi / (ntheta - 1); }
  double s_at(int is) const { return is * ds(); }
  double theta_at(int it) const { return it * dtheta(); }
  std::size_t index(int is, int it) const { return static_cast<std::size_t>(is) * ntheta + it; }
};

struct HypAreaResult {
  double area = 0.0;
  double tail_bound = 0.0;  // bound on the truncated s > s_max contribution
};

/// int f^n sqrt(1 - |d log f|^2) sinh^{n-1} s ds dvol_theta, truncated at
/// s_max with the reported tail bound (assumes f ~ c e^{-s} decay).
HypAreaResult area_hyperbolic(const HypGraph& g);

/// Cone trace at null infinity under the cosh convention:
/// f_inf(theta) = lim f(s, theta) cosh s, by Aitken extrapolation of the
/// last samples. Raises if the tail has not converged.
std::vector<double> f_infinity(const HypGraph& g, double window = 0.5);

/// Generalised perimeter of the profile f_inf on the theta grid of g.
double f_infinity_perimeter(const HypGraph& g, const std::vector<double>& f_inf);

struct BoundCheck {
  double area = 0.0;     // or lhs
  double bound = 0.0;    // or rhs
  double ratio = 0.0;
  bool contained = true;
};

/// Area vs the cone isoperimetric bound omega_n (P/(n omega_n))^{n/(n-1)};
/// containment of the graph in D(C_f) checked at masked nodes above the
/// light cone.
template <int N>
BoundCheck check_thm_8_1(const FlatGraph<N>& g, const ConeProfile<N>& p,
                         double containment_tol = 1e-3);

/// lhs = area_hyperbolic/omega_n against rhs = (P(f_inf)/(n omega_n))^{n/(n-1)}.
BoundCheck check_cor_8_10(const HypGraph& g);

struct PushResult {
  double area_original = 0.0;
  double area_above = 0.0;   // part on or above the hyperboloid, flat chart
  double patch_area = 0.0;   // replacement patch on S_{-1}
  double area_pushed = 0.0;  // area_above + patch_area
  PolarGridIndicator patch;
};

/// Replace the part of the graph below S_{-1} by the forward-reachable
/// hyperboloid patch S_{-1} cap I^+(Sigma_-); never decreases area.
PushResult push_to_hyperboloid(const FlatGraph<2>& g, int patch_ns = 192, int patch_ntheta = 256);

struct DiskBoundCheck {
  double area = 0.0;
  double bound_perimeter = 0.0;  // omega_n (P(E)/(n omega_n))^{n/(n-1)}
  double bound_disk = 0.0;       // omega_n sinh^n(r_{|E|})
  bool contained = true;
};

/// Theorem with a hyperboloid boundary set: area of the graph against both
/// bounds, containment in D(E) via the u+/u- fields.
template <int N>
DiskBoundCheck check_thm_9_1(const FlatGraph<N>& g, const HyperbolicSet<N>& E,
                             const HypVolumeOptions& opts = {}, double containment_tol = 2e-3);

}  // namespace lcone
