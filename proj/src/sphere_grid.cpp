#include "lcone/sphere_grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace lcone {

double spherical_triangle_area(const Vec<3>& a, const Vec<3>& b, const Vec<3>& c) {
  double num = dot(a, cross(b, c));
  double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
  return 2.0 * std::atan2(num, den);
}

template <int N>
double SphereGrid<N>::angle(int i) const {
  if constexpr (N == 2) {
    return 2.0 * kPi * i / size();
  } else {
    (void)i;
    throw std::logic_error("SphereGrid<3>::angle: not defined");
  }
}

template <int N>
double SphereGrid<N>::integrate(const std::vector<double>& values) const {
  double s = 0.0;
  for (int i = 0; i < size(); ++i) s += weights_[i] * values[i];
  return s;
}

// ---------------------------------------------------------------------------
// n = 2
// ---------------------------------------------------------------------------

std::shared_ptr<const SphereGrid<2>> circle_grid(int resolution) {
  if (resolution < 3) throw std::invalid_argument("circle_grid: resolution must be >= 3");
  auto g = std::shared_ptr<SphereGrid<2>>(new SphereGrid<2>());
  int m = resolution;
  g->nodes_.resize(m);
  g->weights_.assign(m, 2.0 * kPi / m);
  g->neighbors_.resize(m);
  for (int i = 0; i < m; ++i) {
    double th = 2.0 * kPi * i / m;
    g->nodes_[i] = Vec<2>{std::cos(th), std::sin(th)};
    g->neighbors_[i] = {(i + m - 1) % m, (i + 1) % m};
  }
  return g;
}

namespace {

double interpolate_circle(const SphereGrid<2>& g, const std::vector<double>& values,
                          const Vec<2>& dir) {
  int m = g.size();
  double th = std::atan2(dir[1], dir[0]);
  if (th < 0.0) th += 2.0 * kPi;
  double u = th * m / (2.0 * kPi);
  int i = static_cast<int>(std::floor(u));
  if (i >= m) i -= m;
  double frac = u - i;
  return (1.0 - frac) * values[i] + frac * values[(i + 1) % m];
}

SphereGrid<2>::Split half_split_circle(const SphereGrid<2>& g, const std::vector<double>& values,
                                       const SVec<2>& w) {
  // g(theta) = <theta, w_x> - w_t changes sign at most twice on the circle.
  auto side_fn = [&](double th) {
    return std::cos(th) * w.x[0] + std::sin(th) * w.x[1] - w.t;
  };
  int m = g.size();
  double h = 2.0 * kPi / m;
  SphereGrid<2>::Split sp;
  for (int i = 0; i < m; ++i) {
    double th0 = i * h, th1 = (i + 1) * h;
    double q0 = values[i], q1 = values[(i + 1) % m];
    double g0 = side_fn(th0), g1 = side_fn(th1);
    auto piece = [&](double a, double b) {
      double qa = q0 + (q1 - q0) * (a - th0) / h;
      double qb = q0 + (q1 - q0) * (b - th0) / h;
      return 0.5 * (qa + qb) * (b - a);
    };
    if (g0 > 0.0 && g1 > 0.0) {
      sp.plus += piece(th0, th1);
    } else if (g0 <= 0.0 && g1 <= 0.0) {
      sp.minus += piece(th0, th1);
    } else {
      double lo = th0, hi = th1;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((side_fn(mid) > 0.0) == (g0 > 0.0))
          lo = mid;
        else
          hi = mid;
      }
      double cut = 0.5 * (lo + hi);
      if (g0 > 0.0) {
        sp.plus += piece(th0, cut);
        sp.minus += piece(cut, th1);
      } else {
        sp.minus += piece(th0, cut);
        sp.plus += piece(cut, th1);
      }
    }
  }
  return sp;
}

}  // namespace

// ---------------------------------------------------------------------------
// n = 3
// ---------------------------------------------------------------------------

namespace {

struct MeshBuilder {
  std::vector<Vec<3>> verts;
  std::vector<std::array<int, 3>> tris;
  std::map<std::pair<int, int>, int> midpoint_cache;

  int midpoint(int a, int b) {
    auto key = std::minmax(a, b);
    auto it = midpoint_cache.find(key);
    if (it != midpoint_cache.end()) return it->second;
    int idx = static_cast<int>(verts.size());
    verts.push_back(normalized(verts[a] + verts[b]));
    midpoint_cache.emplace(key, idx);
    return idx;
  }

  void subdivide() {
    std::vector<std::array<int, 3>> next;
    next.reserve(tris.size() * 4);
    for (auto& t : tris) {
      int ab = midpoint(t[0], t[1]);
      int bc = midpoint(t[1], t[2]);
      int ca = midpoint(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris.swap(next);
  }
};

Vec<3> circumcenter(const Vec<3>& a, const Vec<3>& b, const Vec<3>& c) {
  Vec<3> q = cross(b - a, c - a);
  q = normalized(q);
  if (dot(q, a + b + c) < 0.0) q = -q;
  return q;
}

int locate_triangle_impl(const SphereGrid<3>& g, const std::vector<std::array<int, 3>>& tris,
                         const std::vector<std::vector<int>>& node_tris, const Vec<3>& dir,
                         std::array<double, 3>& bary) {
  int best = 0;
  double bd = -2.0;
  for (int i = 0; i < g.size(); ++i) {
    double d = dot(g.node(i), dir);
    if (d > bd) {
      bd = d;
      best = i;
    }
  }
  auto try_tri = [&](int k) {
    auto& t = tris[k];
    const Vec<3>&a = g.node(t[0]), &b = g.node(t[1]), &c = g.node(t[2]);
    double det = dot(a, cross(b, c));
    if (std::abs(det) < 1e-14) return false;
    double wa = dot(dir, cross(b, c)) / det;
    double wb = dot(a, cross(dir, c)) / det;
    double wc = dot(a, cross(b, dir)) / det;
    const double eps = -1e-12;
    if (wa < eps || wb < eps || wc < eps) return false;
    double s = wa + wb + wc;
    bary = {wa / s, wb / s, wc / s};
    return true;
  };
  for (int k : node_tris[best])
    if (try_tri(k)) return k;
  for (int k = 0; k < static_cast<int>(tris.size()); ++k)
    if (try_tri(k)) return k;
  throw std::runtime_error("SphereGrid<3>: direction not located in any triangle");
}

SphereGrid<3>::Split half_split_sphere(const SphereGrid<3>& g,
                                       const std::vector<std::array<int, 3>>& tris,
                                       const std::vector<double>& values, const SVec<3>& w) {
  // Clip each triangle against the cap boundary <x, w_x> = w_t |x|,
  // integrating the linear interpolant over spherical sub-polygons.
  auto side_val = [&](const Vec<3>& p) { return dot(p, w.x) - w.t * norm(p); };
  SphereGrid<3>::Split sp;
  for (const auto& t : tris) {
    Vec<3> p[3] = {g.node(t[0]), g.node(t[1]), g.node(t[2])};
    double q[3] = {values[t[0]], values[t[1]], values[t[2]]};
    double gv[3] = {side_val(p[0]), side_val(p[1]), side_val(p[2])};

    bool all_plus = gv[0] > 0 && gv[1] > 0 && gv[2] > 0;
    bool all_minus = gv[0] <= 0 && gv[1] <= 0 && gv[2] <= 0;
    if (all_plus || all_minus) {
      double area = std::abs(spherical_triangle_area(p[0], p[1], p[2]));
      double val = area * (q[0] + q[1] + q[2]) / 3.0;
      (all_plus ? sp.plus : sp.minus) += val;
      continue;
    }
    std::vector<Vec<3>> poly_p, poly_m;
    std::vector<double> val_p, val_m;
    for (int j = 0; j < 3; ++j) {
      int j2 = (j + 1) % 3;
      bool in0 = gv[j] > 0, in1 = gv[j2] > 0;
      if (in0) {
        poly_p.push_back(p[j]);
        val_p.push_back(q[j]);
      } else {
        poly_m.push_back(p[j]);
        val_m.push_back(q[j]);
      }
      if (in0 != in1) {
        double s = gv[j] / (gv[j] - gv[j2]);  // crossing along the chord
        Vec<3> x = normalized(p[j] + s * (p[j2] - p[j]));
        double qx = q[j] + s * (q[j2] - q[j]);
        poly_p.push_back(x);
        val_p.push_back(qx);
        poly_m.push_back(x);
        val_m.push_back(qx);
      }
    }
    auto poly_integral = [](const std::vector<Vec<3>>& poly, const std::vector<double>& val) {
      double acc = 0.0;
      for (size_t j = 1; j + 1 < poly.size(); ++j) {
        double a = std::abs(spherical_triangle_area(poly[0], poly[j], poly[j + 1]));
        acc += a * (val[0] + val[j] + val[j + 1]) / 3.0;
      }
      return acc;
    };
    sp.plus += poly_integral(poly_p, val_p);
    sp.minus += poly_integral(poly_m, val_m);
  }
  return sp;
}

}  // namespace

int icosphere_level_for(int resolution) {
  for (int level = 1; level <= 7; ++level)
    if (icosphere_node_count(level) >= resolution) return level;
  throw std::invalid_argument("icosphere_level_for: resolution too large");
}

std::shared_ptr<const SphereGrid<3>> icosphere_grid(int level) {
  if (level < 0 || level > 7) throw std::invalid_argument("icosphere_grid: level out of range");
  MeshBuilder mb;
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  const double raw[12][3] = {{-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
                             {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
                             {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& r : raw) mb.verts.push_back(normalized(Vec<3>{r[0], r[1], r[2]}));
  mb.tris = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
             {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
             {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
             {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int l = 0; l < level; ++l) mb.subdivide();

  auto g = std::shared_ptr<SphereGrid<3>>(new SphereGrid<3>());
  g->nodes_ = std::move(mb.verts);
  g->triangles_ = std::move(mb.tris);
  int nv = g->size();
  g->weights_.assign(nv, 0.0);
  g->neighbors_.resize(nv);
  g->node_triangles_.resize(nv);

  // Voronoi (circumcentric) cell areas: each triangle is split among its
  // three vertices by the edge midpoints and the circumcenter. Icosphere
  // triangles are acute, so the pieces partition the sphere and the weights
  // sum to 4*pi up to roundoff.
  for (int k = 0; k < g->triangle_count(); ++k) {
    auto& t = g->triangles_[k];
    const Vec<3>&a = g->nodes_[t[0]], &b = g->nodes_[t[1]], &c = g->nodes_[t[2]];
    Vec<3> q = circumcenter(a, b, c);
    Vec<3> mab = normalized(a + b), mbc = normalized(b + c), mca = normalized(c + a);
    g->weights_[t[0]] += std::abs(spherical_triangle_area(a, mab, q)) +
                         std::abs(spherical_triangle_area(a, q, mca));
    g->weights_[t[1]] += std::abs(spherical_triangle_area(b, mbc, q)) +
                         std::abs(spherical_triangle_area(b, q, mab));
    g->weights_[t[2]] += std::abs(spherical_triangle_area(c, mca, q)) +
                         std::abs(spherical_triangle_area(c, q, mbc));
    for (int j = 0; j < 3; ++j) g->node_triangles_[t[j]].push_back(k);
    for (int j = 0; j < 3; ++j) {
      int u = t[j], v = t[(j + 1) % 3];
      auto& nu = g->neighbors_[u];
      if (std::find(nu.begin(), nu.end(), v) == nu.end()) nu.push_back(v);
      auto& nvv = g->neighbors_[v];
      if (std::find(nvv.begin(), nvv.end(), u) == nvv.end()) nvv.push_back(u);
    }
  }
  return g;
}

template <int N>
int SphereGrid<N>::locate_triangle(const Vec<3>& dir, std::array<double, 3>& bary) const {
  if constexpr (N == 3) {
    return locate_triangle_impl(*this, triangles_, node_triangles_, dir, bary);
  } else {
    (void)dir;
    (void)bary;
    throw std::logic_error("locate_triangle: n = 3 only");
  }
}

template <int N>
double SphereGrid<N>::interpolate(const std::vector<double>& values, const Vec<N>& dir) const {
  if constexpr (N == 2) {
    return interpolate_circle(*this, values, dir);
  } else {
    std::array<double, 3> bary{};
    int k = locate_triangle(normalized(dir), bary);
    auto& t = triangles_[k];
    return bary[0] * values[t[0]] + bary[1] * values[t[1]] + bary[2] * values[t[2]];
  }
}

template <int N>
typename SphereGrid<N>::Split SphereGrid<N>::half_split(const std::vector<double>& values,
                                                        const SVec<N>& w) const {
  if constexpr (N == 2)
    return half_split_circle(*this, values, w);
  else
    return half_split_sphere(*this, triangles_, values, w);
}

template <int N>
std::shared_ptr<const SphereGrid<N>> sphere_grid(int resolution) {
  if constexpr (N == 2) {
    return circle_grid(resolution);
  } else {
    if (resolution < 8) throw std::invalid_argument("sphere_grid<3>: resolution must be >= 8");
    return icosphere_grid(icosphere_level_for(resolution));
  }
}

template class SphereGrid<2>;
template class SphereGrid<3>;
template std::shared_ptr<const SphereGrid<2>> sphere_grid<2>(int);
template std::shared_ptr<const SphereGrid<3>> sphere_grid<3>(int);

}  // namespace lcone
