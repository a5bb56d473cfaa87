#pragma once

#include "lcone/profile.hpp"

namespace lcone {

/// Arrival time of the strict future boundary of D(C_f) over the spatial
/// point x: min over boundary sample points of f(theta) + |x - f(theta) theta|.
/// Satisfies u >= |x|, u is 1-Lipschitz, and u(rho theta) = rho outside the
/// cone. The discrete minimum over nodes is >= the continuum infimum.
template <int N>
double arrival(const ConeProfile<N>& p, const Vec<N>& x);

/// Exact arrival for step profiles: minimises over each constant arc in
/// closed form and over the one-sided boundary values.
double arrival(const SectorProfile& p, const Vec<2>& x);

/// Pure evaluation view; no cache, safe for concurrent use.
template <int N>
class ArrivalField {
 public:
  explicit ArrivalField(const ConeProfile<N>& p) : p_(&p) {}
  double operator()(const Vec<N>& x) const { return arrival(*p_, x); }
  const ConeProfile<N>& profile() const { return *p_; }

 private:
  const ConeProfile<N>* p_;
};

template <int N>
struct VolumeOptions {
  int radial_nodes = N == 2 ? 1024 : 256;
  /// Spatial direction grid for the outer integral; defaults to the
  /// profile's own grid.
  std::shared_ptr<const SphereGrid<N>> dir_grid;
};

/// |D(C_f)|: composite trapezoid in rho of max(u - rho, 0) rho^{n-1} over
/// grid directions. Carries a small upward bias (grid arrival >= true
/// arrival); see the convergence study.
template <int N>
double dod_volume(const ConeProfile<N>& p, const VolumeOptions<N>& opts = {});
double dod_volume(const SectorProfile& p, int dir_count = 2048, int radial_nodes = 1024);

/// Symmetric-difference volume |D(C_f1) triangle D(C_f2)| =
/// integral of |u1 - u2| rho^{n-1}; both regions share the lower boundary t = r.
template <int N>
double dod_symdiff(const ConeProfile<N>& p1, const ConeProfile<N>& p2,
                   const VolumeOptions<N>& opts = {});

/// Parameterisation f_delta of C_{delta e0} intersected with D(C_f): per
/// direction the unique root of delta + rho = u(rho theta). Requires
/// 0 < delta < min f; satisfies f_delta <= f - delta/2.
template <int N>
ConeProfile<N> future_section(const ConeProfile<N>& p, double delta);

/// V / (2 omega_n/(n+1)) divided by (P / (n omega_n))^{(n+1)/(n-1)}; 1 for caps.
template <int N>
double isoperimetric_ratio(const ConeProfile<N>& p, const VolumeOptions<N>& opts = {});

namespace detail {
/// Plain serial reference for dod_volume, kept for testing the kernels.
template <int N>
double dod_volume_serial(const ConeProfile<N>& p, const VolumeOptions<N>& opts);
}  // namespace detail

}  // namespace lcone
