#pragma once

#include <cstdint>

#include "lcone/arrival.hpp"
#include "lcone/conformal.hpp"

namespace lcone {

struct DescentOptions {
  int iterations = 300;
  std::uint64_t seed = 0;
  double alpha_max = 1.5;    // boost rapidity sampled uniformly on [-alpha_max, alpha_max]
  int volume_dirs = 256;     // direction grid for the per-iteration volume/gap quadrature
  int volume_radial = 256;
  double early_stop_rel_gain = 0.0;  // 0 disables the early stop
  int early_stop_window = 50;
};

template <int N>
struct DescentRecord {
  int iter;              // 0 is the initial state; its plane normal is zero
  SVec<N> plane_normal;
  double perimeter;
  double volume;
  double gap_to_cap;     // |D(current) triangle D(C_{l_f})|, l_f perimeter-matched
};

template <int N>
struct DescentTrace {
  std::vector<DescentRecord<N>> rows;
  ConeProfile<N> final_profile;
  double cap_radius;       // l_f with n omega_n l_f^{n-1} = perimeter(f0)
  double cap_volume;       // cap_volume_oracle(N, l_f)
  DescentOptions options;
};

/// Randomised maximising sequence with v = e0: sample a boosted reflection
/// plane (uniform spatial direction, uniform rapidity, resampled while
/// |eta(e0,w)| < 1e-6), polarize, record. Volume never decreases beyond
/// quadrature noise; perimeter is conserved up to interpolation error.
/// Deterministic for fixed (seed, options).
template <int N>
DescentTrace<N> polarization_descent(const ConeProfile<N>& p, const DescentOptions& opts);

}  // namespace lcone
