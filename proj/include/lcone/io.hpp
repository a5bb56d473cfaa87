#pragma once

#include <string>

#include "lcone/achronal.hpp"
#include "lcone/descent.hpp"

namespace lcone::io {

/// n=2 profile: CSV `theta,value`, theta uniform and strictly increasing in
/// [0, 2pi), values positive. Violations raise with the file line number.
ConeProfile<2> read_profile2(const std::string& path);
void write_profile2(const std::string& path, const ConeProfile<2>& p);

/// n=3 profile: `v x y z` unit node lines followed by `f <value>` lines in
/// node order; the node set must be one of the generated icospheres.
ConeProfile<3> read_profile3(const std::string& path);
void write_profile3(const std::string& path, const ConeProfile<3>& p);

/// Flat graph: `# lattice lo... hi... nodes...` header, then CSV
/// `x1[,x2],nu` rows in row-major node order.
template <int N>
FlatGraph<N> read_flat_graph(const std::string& path);
template <int N>
void write_flat_graph(const std::string& path, const FlatGraph<N>& g);

/// Hyperbolic graph: `# grid dim ns ntheta smax` header, then `s,theta,f`.
HypGraph read_hyp_graph(const std::string& path);
void write_hyp_graph(const std::string& path, const HypGraph& g);

/// Ball union: CSV `s,theta[,phi],delta` (geodesic polar centre coordinates).
template <int N>
HyperbolicSet<N> read_ball_union(const std::string& path);
template <int N>
void write_ball_union(const std::string& path, const HyperbolicSet<N>& E);

/// Polar grid indicator: `# polar-grid ns ntheta smax` header plus one
/// run-length-encoded row per s (alternating zero/one run lengths, zeros first).
HyperbolicSet<2> read_grid_set(const std::string& path);
void write_grid_set(const std::string& path, const HyperbolicSet<2>& E);

/// Descent trace CSV `iter,w_t,w_x1[,w_x2,w_x3],perimeter,volume,gap_to_cap`
/// plus a JSON sidecar (same stem, .json) recording seed and schedule.
template <int N>
void write_descent_trace(const std::string& csv_path, const DescentTrace<N>& trace);

}  // namespace lcone::io
