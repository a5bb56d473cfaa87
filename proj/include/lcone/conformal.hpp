#pragma once

#include "lcone/profile.hpp"

namespace lcone {

/// Action of a Lorentz reflection on null directions: the ray (1, theta)
/// maps to lambda(theta) (1, Gamma(theta)) with
///   lambda(theta) = 1 - 2 (<theta, w_x> - w_t) w_t,
///   Gamma(theta)  = (theta - 2 (<theta, w_x> - w_t) w_x) / lambda(theta).
/// Gamma is an involution on the sphere and lambda(Gamma(theta)) lambda(theta) = 1.
template <int N>
double conformal_factor(const SVec<N>& unit_normal, const Vec<N>& dir);
template <int N>
Vec<N> conformal_image(const SVec<N>& unit_normal, const Vec<N>& dir);

/// Per-node precomputation of the conformal reflection for one grid.
template <int N>
class ConformalReflection {
 public:
  ConformalReflection(const ReflectionPlane<N>& plane,
                      std::shared_ptr<const SphereGrid<N>> grid);

  const ReflectionPlane<N>& plane() const { return plane_; }
  const std::shared_ptr<const SphereGrid<N>>& grid() const { return grid_; }
  double lambda(int i) const { return lambda_[i]; }
  double lambda_at_image(int i) const { return lambda_image_[i]; }
  const Vec<N>& image(int i) const { return image_[i]; }
  Side ray_side(int i) const { return side_[i]; }

 private:
  ReflectionPlane<N> plane_;
  std::shared_ptr<const SphereGrid<N>> grid_;
  std::vector<double> lambda_, lambda_image_;
  std::vector<Vec<N>> image_;
  std::vector<Side> side_;
};

/// Parameterisation of the reflected lightcone:
/// g(theta) = lambda(Gamma(theta)) f(Gamma(theta)). Preserves the
/// generalised perimeter up to interpolation error.
template <int N>
ConeProfile<N> reflect_profile(const ConeProfile<N>& p, const ConformalReflection<N>& cr);

/// Conformal polarisation: max(f, g) on rays in H+, min on H-, f on H.
template <int N>
ConeProfile<N> polarize_profile(const ConeProfile<N>& p, const ConformalReflection<N>& cr);

enum class SymmetrizeSign { plus, minus };

/// Reflection symmetrisation about (w, H_w): keeps f on the chosen side of
/// the plane normal w (plus = the side w itself points into) and overwrites
/// the other side with reflected values.
template <int N>
ConeProfile<N> symmetrize_profile(const ConeProfile<N>& p, const ReflectionPlane<N>& plane,
                                  SymmetrizeSign sign);

template <int N>
struct EqualPerimeterPlane {
  SVec<N> normal;                     // unit spacelike
  ReflectionPlane<N> plane;           // polariser possibly nudged, see flag
  bool polarization_admissible;       // true iff the requested v works as-is
  double split_plus, split_minus;     // half-integrals of f^{n-1}
};

/// Unique equal perimeter separation hyperplane with normal in the timelike
/// 2-plane span{a, b}: bisection on the continuous, monotone split function.
/// |split_plus - split_minus| <= 1e-10 * perimeter on return.
template <int N>
EqualPerimeterPlane<N> equal_perimeter_plane(const ConeProfile<N>& p, const SVec<N>& a,
                                             const SVec<N>& b,
                                             const SVec<N>& v = time_axis<N>());

template <int N>
struct Z2nResult {
  ConeProfile<N> profile;
  SVec<N> axis;                        // future unit timelike, orthogonal to all normals
  std::vector<SVec<N>> normals;        // n mutually eta-orthogonal spacelike units
};

/// n rounds of equal-perimeter positive symmetrisation about mutually
/// orthogonal planes; the result is reflection symmetric about each of them
/// and has a timelike axis of symmetry.
template <int N>
Z2nResult<N> z2n_symmetrize(const ConeProfile<N>& p);

}  // namespace lcone
