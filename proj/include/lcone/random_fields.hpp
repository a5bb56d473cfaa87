#pragma once

#include <random>

#include "lcone/achronal.hpp"
#include "lcone/indicator.hpp"
#include "lcone/profile.hpp"

namespace lcone {

/// Smooth random profile around 1: truncated Fourier series for n=2,
/// low-degree direction polynomials for n=3. Coefficient budget `amplitude`
/// keeps f >= 1 - amplitude > 0.
template <int N>
ConeProfile<N> random_profile(std::shared_ptr<const SphereGrid<N>> grid, std::mt19937_64& rng,
                              double amplitude = 0.35, int terms = 6);

/// Admissible random reflection plane for the polariser v: uniform spatial
/// direction, rapidity uniform on [-alpha_max, alpha_max], resampled while
/// |eta(v, w)| < 1e-6.
template <int N>
ReflectionPlane<N> random_plane(std::mt19937_64& rng, double alpha_max = 1.5,
                                const SVec<N>& v = time_axis<N>());

/// Random 1-Lipschitz bump graph: base height plus a smooth field with
/// gradient budget `lip`, masked by a disk.
template <int N>
FlatGraph<N> random_lipschitz_graph(double box_radius, int nodes, double base, double bump,
                                    double lip, double disk_radius, std::mt19937_64& rng);

/// Random blob occupancy (union of Euclidean balls in spacetime) inside the
/// given box; cells whose reflected centre leaves the box are excluded so
/// the blob is polarisable about `plane`.
template <int N>
IndicatorRegion<N> random_blob(const IndicatorRegion<N>& box_spec, int ball_count,
                               const ReflectionPlane<N>& plane, std::mt19937_64& rng);

/// Random blob on the hyperboloid polar grid: union of geodesic balls with
/// centres within s <= s_fill, trimmed so reflections stay inside s_max.
HyperbolicSet<2> random_hyp_blob(int ns, int ntheta, double s_max, double s_fill, int ball_count,
                                 std::mt19937_64& rng);

}  // namespace lcone
