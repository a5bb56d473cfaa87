#pragma once

#include <memory>
#include <vector>

#include "lcone/vec.hpp"

namespace lcone {

/// Quadrature grid on S^{n-1}: unit nodes with positive weights summing to
/// the sphere area n*omega_n. n=2 uses equally spaced angles, n=3 a
/// subdivided icosahedron with per-node Voronoi areas.
template <int N>
class SphereGrid {
 public:
  int size() const { return static_cast<int>(nodes_.size()); }
  const Vec<N>& node(int i) const { return nodes_[i]; }
  double weight(int i) const { return weights_[i]; }
  const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }

  /// Value of the piecewise-linear interpolant of nodal data at a unit
  /// direction (linear in angle on S^1, barycentric on the icosphere).
  double interpolate(const std::vector<double>& values, const Vec<N>& dir) const;

  /// Quadrature of nodal data: sum_i w_i q_i.
  double integrate(const std::vector<double>& values) const;

  /// Integrals of the interpolant of q over the two sides of the plane with
  /// spacetime normal w, the sides taken along null rays (1, theta):
  /// plus = { theta : <theta, w_x> - w_t > 0 }. Continuous in w; the two
  /// parts sum to the full-sphere integral of the same rule.
  struct Split {
    double plus = 0.0;
    double minus = 0.0;
  };
  Split half_split(const std::vector<double>& values, const SVec<N>& w) const;

  // n=2 only: node angle in [0, 2pi).
  double angle(int i) const;

  // n=3 only: triangle mesh access.
  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  const std::array<int, 3>& triangle(int k) const { return triangles_[k]; }

  friend std::shared_ptr<const SphereGrid<2>> circle_grid(int resolution);
  friend std::shared_ptr<const SphereGrid<3>> icosphere_grid(int level);

 private:
  SphereGrid() = default;

  std::vector<Vec<N>> nodes_;
  std::vector<double> weights_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::array<int, 3>> triangles_;       // n=3
  std::vector<std::vector<int>> node_triangles_;    // n=3
  int locate_triangle(const Vec<3>& dir, std::array<double, 3>& bary) const;
};

std::shared_ptr<const SphereGrid<2>> circle_grid(int resolution);
std::shared_ptr<const SphereGrid<3>> icosphere_grid(int level);

/// Factory keyed by a node-count request: n=2 gives exactly `resolution`
/// angles, n=3 the smallest icosphere level with at least that many nodes.
template <int N>
std::shared_ptr<const SphereGrid<N>> sphere_grid(int resolution);

int icosphere_level_for(int resolution);
inline int icosphere_node_count(int level) { return 10 * (1 << (2 * level)) + 2; }

/// Signed spherical triangle area (Oosterom-Strackee form of the excess).
double spherical_triangle_area(const Vec<3>& a, const Vec<3>& b, const Vec<3>& c);

}  // namespace lcone
