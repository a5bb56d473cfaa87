#include "lcone/descent.hpp"

#include <cmath>
#include <random>

#include "lcone/parallel.hpp"

namespace lcone {

namespace {

// volume and distance to the matched cap in one pass; the cap arrival about
// e0 is analytic: u_cap = max(2l - rho, rho)
template <int N>
void volume_and_gap(const ConeProfile<N>& p, double l, const SphereGrid<N>& dirs,
                    int radial_nodes, double& volume, double& gap) {
  double rmax = std::max(p.max_value(), l);
  double h = rmax / radial_nodes;
  int nd = dirs.size();
  std::vector<double> pv(nd), pg(nd);
#pragma omp parallel for schedule(static) if (par::enabled())
  for (int i = 0; i < nd; ++i) {
    const Vec<N> dir = dirs.node(i);
    double av = 0.0, ag = 0.0;
    for (int j = 0; j <= radial_nodes; ++j) {
      double rho = j * h;
      double u = arrival(p, rho * dir);
      double up = std::max(u - rho, 0.0);
      double uc = std::max(2.0 * l - 2.0 * rho, 0.0);
      double wj = (j == 0 || j == radial_nodes) ? 0.5 : 1.0;
      double rpow = (N == 3) ? rho * rho : rho;
      av += wj * up * rpow;
      ag += wj * std::abs(up - uc) * rpow;
    }
    pv[i] = av * h;
    pg[i] = ag * h;
  }
  volume = gap = 0.0;
  for (int i = 0; i < nd; ++i) {
    volume += dirs.weight(i) * pv[i];
    gap += dirs.weight(i) * pg[i];
  }
}

template <int N>
Vec<N> sample_direction(std::mt19937_64& rng);

template <>
Vec<2> sample_direction<2>(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  double th = u(rng);
  return {std::cos(th), std::sin(th)};
}

template <>
Vec<3> sample_direction<3>(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uz(-1.0, 1.0), uph(0.0, 2.0 * kPi);
  double z = uz(rng), ph = uph(rng);
  double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(ph), r * std::sin(ph), z};
}

}  // namespace

template <int N>
DescentTrace<N> polarization_descent(const ConeProfile<N>& p, const DescentOptions& opts) {
  if (opts.iterations < 1) throw std::invalid_argument("polarization_descent: iterations >= 1");
  DescentTrace<N> trace;
  trace.options = opts;

  double perim0 = perimeter(p);
  trace.cap_radius = matched_cap_radius(N, perim0);
  trace.cap_volume = cap_volume_oracle(N, trace.cap_radius);

  auto dirs = sphere_grid<N>(opts.volume_dirs);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> ua(-opts.alpha_max, opts.alpha_max);

  ConeProfile<N> cur = p;
  double vol, gap;
  volume_and_gap(cur, trace.cap_radius, *dirs, opts.volume_radial, vol, gap);
  trace.rows.push_back({0, SVec<N>{}, perim0, vol, gap});

  SVec<N> e0 = time_axis<N>();
  int stall = 0;
  double best = vol;
  for (int it = 1; it <= opts.iterations; ++it) {
    double alpha;
    do {
      alpha = ua(rng);
    } while (std::abs(std::sinh(alpha)) < 1e-6);
    Vec<N> dir = sample_direction<N>(rng);
    SVec<N> w;
    w.t = std::sinh(alpha);
    w.x = std::cosh(alpha) * dir;
    ReflectionPlane<N> plane(w, e0);
    ConformalReflection<N> cr(plane, cur.grid);
    cur = polarize_profile(cur, cr);

    volume_and_gap(cur, trace.cap_radius, *dirs, opts.volume_radial, vol, gap);
    trace.rows.push_back({it, w, perimeter(cur), vol, gap});

    if (opts.early_stop_rel_gain > 0.0) {
      if (vol <= best * (1.0 + opts.early_stop_rel_gain))
        ++stall;
      else
        stall = 0;
      best = std::max(best, vol);
      if (stall >= opts.early_stop_window) break;
    }
  }
  trace.final_profile = std::move(cur);
  return trace;
}

template DescentTrace<2> polarization_descent(const ConeProfile<2>&, const DescentOptions&);
template DescentTrace<3> polarization_descent(const ConeProfile<3>&, const DescentOptions&);

}  // namespace lcone
