#include "lcone/random_fields.hpp"

#include <cmath>

namespace lcone {

template <int N>
ConeProfile<N> random_profile(std::shared_ptr<const SphereGrid<N>> grid, std::mt19937_64& rng,
                              double amplitude, int terms) {
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  std::vector<double> f(grid->size());
  if constexpr (N == 2) {
    std::vector<double> a(terms), b(terms);
    double budget = 0.0;
    for (int m = 0; m < terms; ++m) {
      a[m] = uc(rng) / (m + 1);
      b[m] = uc(rng) / (m + 1);
      budget += std::abs(a[m]) + std::abs(b[m]);
    }
    double scale = budget > 0.0 ? amplitude / budget : 0.0;
    for (int i = 0; i < grid->size(); ++i) {
      double th = grid->angle(i);
      double v = 1.0;
      for (int m = 0; m < terms; ++m)
        v += scale * (a[m] * std::cos((m + 1) * th) + b[m] * std::sin((m + 1) * th));
      f[i] = v;
    }
  } else {
    std::uniform_real_distribution<double> uz(-1.0, 1.0), uph(0.0, 2.0 * kPi);
    std::uniform_int_distribution<int> up(1, 3);
    std::vector<Vec<3>> dirs(terms);
    std::vector<double> coef(terms);
    std::vector<int> pow_(terms);
    double budget = 0.0;
    for (int j = 0; j < terms; ++j) {
      double z = uz(rng), ph = uph(rng);
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      dirs[j] = Vec<3>{r * std::cos(ph), r * std::sin(ph), z};
      coef[j] = uc(rng);
      pow_[j] = up(rng);
      budget += std::abs(coef[j]);
    }
    double scale = budget > 0.0 ? amplitude / budget : 0.0;
    for (int i = 0; i < grid->size(); ++i) {
      double v = 1.0;
      for (int j = 0; j < terms; ++j)
        v += scale * coef[j] * std::pow(dot(grid->node(i), dirs[j]), pow_[j]);
      f[i] = v;
    }
  }
  return ConeProfile<N>(std::move(grid), std::move(f));
}

namespace {

template <int N>
Vec<N> random_direction(std::mt19937_64& rng) {
  if constexpr (N == 2) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    double th = u(rng);
    return Vec<2>{std::cos(th), std::sin(th)};
  } else {
    std::uniform_real_distribution<double> uz(-1.0, 1.0), uph(0.0, 2.0 * kPi);
    double z = uz(rng), ph = uph(rng);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Vec<3>{r * std::cos(ph), r * std::sin(ph), z};
  }
}

}  // namespace

template <int N>
ReflectionPlane<N> random_plane(std::mt19937_64& rng, double alpha_max, const SVec<N>& v) {
  std::uniform_real_distribution<double> ua(-alpha_max, alpha_max);
  while (true) {
    double alpha = ua(rng);
    Vec<N> dir = random_direction<N>(rng);
    SVec<N> w;
    w.t = std::sinh(alpha);
    w.x = std::cosh(alpha) * dir;
    if (std::abs(minkowski_inner(v, w)) < 1e-6) continue;
    return ReflectionPlane<N>(w, v);
  }
}

template <int N>
FlatGraph<N> random_lipschitz_graph(double box_radius, int nodes, double base, double bump,
                                    double lip, double disk_radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uc(-1.0, 1.0), uph(0.0, 2.0 * kPi);
  const int waves = 5;
  std::vector<Vec<N>> k(waves);
  std::vector<double> amp(waves), phase(waves);
  double grad_budget = 0.0, amp_budget = 0.0;
  for (int j = 0; j < waves; ++j) {
    Vec<N> dir = random_direction<N>(rng);
    double freq = 1.0 + 2.0 * std::abs(uc(rng));
    k[j] = freq * dir;
    amp[j] = uc(rng);
    phase[j] = uph(rng);
    grad_budget += std::abs(amp[j]) * freq;
    amp_budget += std::abs(amp[j]);
  }
  double scale = std::min(lip / std::max(grad_budget, 1e-12),
                          bump / std::max(amp_budget, 1e-12));
  Vec<N> lo, hi;
  std::array<int, N> nn{};
  for (int a = 0; a < N; ++a) {
    lo[a] = -box_radius;
    hi[a] = box_radius;
    nn[a] = nodes;
  }
  FlatGraph<N> g(lo, hi, nn);
  std::array<int, N> ix{};
  std::size_t total = g.values.size();
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t rest = c;
    for (int a = N - 1; a >= 0; --a) {
      ix[a] = static_cast<int>(rest % nn[a]);
      rest /= nn[a];
    }
    Vec<N> x = g.point(ix);
    double v = base;
    for (int j = 0; j < waves; ++j) v += scale * amp[j] * std::sin(dot(k[j], x) + phase[j]);
    g.values[g.index(ix)] = v;
  }
  DiskMask<N> dm;
  dm.radius = disk_radius;
  g.mask = dm;
  return g;
}

template <int N>
IndicatorRegion<N> random_blob(const IndicatorRegion<N>& box_spec, int ball_count,
                               const ReflectionPlane<N>& plane, std::mt19937_64& rng) {
  IndicatorRegion<N> out = box_spec;
  std::fill(out.occ.begin(), out.occ.end(), 0);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<SVec<N>> centers(ball_count);
  std::vector<double> radii(ball_count);
  double t_span = out.t_hi - out.t_lo;
  for (int j = 0; j < ball_count; ++j) {
    SVec<N> c;
    c.t = out.t_lo + t_span * (0.25 + 0.5 * u01(rng));
    for (int k = 0; k < N; ++k)
      c.x[k] = out.x_lo[k] + (out.x_hi[k] - out.x_lo[k]) * (0.25 + 0.5 * u01(rng));
    centers[j] = c;
    radii[j] = t_span * (0.05 + 0.12 * u01(rng));
  }
  std::array<int, N> ix{};
  for (int it = 0; it < out.nt; ++it) {
    ix.fill(0);
    while (true) {
      SVec<N> p = out.center(it, ix);
      bool inside = false;
      for (int j = 0; j < ball_count && !inside; ++j) {
        SVec<N> d = p - centers[j];
        inside = euclid_norm(d) < radii[j];
      }
      if (inside && out.inside_box(reflect(p, plane))) out.occ[out.index(it, ix)] = 1;
      int k = N - 1;
      while (k >= 0 && ++ix[k] == out.nx[k]) ix[k--] = 0;
      if (k < 0) break;
    }
  }
  return out;
}

HyperbolicSet<2> random_hyp_blob(int ns, int ntheta, double s_max, double s_fill, int ball_count,
                                 std::mt19937_64& rng) {
  PolarGridIndicator grid(ns, ntheta, s_max);
  std::uniform_real_distribution<double> us(0.0, s_fill), uth(0.0, 2.0 * kPi),
      ur(0.15 * s_fill, 0.45 * s_fill);
  std::vector<SVec<2>> centers(ball_count);
  std::vector<double> radii(ball_count);
  for (int j = 0; j < ball_count; ++j) {
    double s = us(rng), th = uth(rng);
    centers[j] = hyp_point<2>(s, Vec<2>{std::cos(th), std::sin(th)});
    radii[j] = ur(rng);
  }
  for (int is = 0; is < ns; ++is) {
    double s = (is + 0.5) * grid.ds();
    for (int it = 0; it < ntheta; ++it) {
      double th = (it + 0.5) * grid.dtheta();
      SVec<2> p = hyp_point<2>(s, Vec<2>{std::cos(th), std::sin(th)});
      for (int j = 0; j < ball_count; ++j) {
        if (hyp_distance(p, centers[j]) < radii[j]) {
          grid.occ[grid.index(is, it)] = 1;
          break;
        }
      }
    }
  }
  return make_grid_set(std::move(grid));
}

template ConeProfile<2> random_profile(std::shared_ptr<const SphereGrid<2>>, std::mt19937_64&,
                                       double, int);
template ConeProfile<3> random_profile(std::shared_ptr<const SphereGrid<3>>, std::mt19937_64&,
                                       double, int);
template ReflectionPlane<2> random_plane(std::mt19937_64&, double, const SVec<2>&);
template ReflectionPlane<3> random_plane(std::mt19937_64&, double, const SVec<3>&);
template FlatGraph<2> random_lipschitz_graph(double, int, double, double, double, double,
                                             std::mt19937_64&);
template FlatGraph<3> random_lipschitz_graph(double, int, double, double, double, double,
                                             std::mt19937_64&);
template IndicatorRegion<2> random_blob(const IndicatorRegion<2>&, int, const ReflectionPlane<2>&,
                                        std::mt19937_64&);
template IndicatorRegion<3> random_blob(const IndicatorRegion<3>&, int, const ReflectionPlane<3>&,
                                        std::mt19937_64&);

}  // namespace lcone
