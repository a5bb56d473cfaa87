#include "lcone/arrival.hpp"

#include <cmath>

#include "lcone/parallel.hpp"

namespace lcone {

namespace par {
namespace {
bool g_enabled = true;
}
bool enabled() { return g_enabled; }
void set_enabled(bool on) { g_enabled = on; }
}  // namespace par

template <int N>
double arrival(const ConeProfile<N>& p, const Vec<N>& x) {
  const auto& g = *p.grid;
  int m = g.size();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    double f = p.values[i];
    double d2 = 0.0;
    for (int k = 0; k < N; ++k) {
      double d = x[k] - f * g.node(i)[k];
      d2 += d * d;
    }
    double cand = f + std::sqrt(d2);
    if (cand < best) best = cand;
  }
  return best;
}

double arrival(const SectorProfile& p, const Vec<2>& x) {
  int m = p.sectors();
  double r = norm(x);
  double phi = std::atan2(x[1], x[0]);
  if (phi < 0.0) phi += 2.0 * kPi;
  auto chord = [&](double radius, double th) {
    double dx = x[0] - radius * std::cos(th);
    double dy = x[1] - radius * std::sin(th);
    return radius + std::sqrt(dx * dx + dy * dy);
  };
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < m; ++k) {
    double th0 = p.bounds[k];
    double th1 = (k + 1 < m) ? p.bounds[k + 1] : p.bounds[0] + 2.0 * kPi;
    double v = p.sector_values[k];
    // distance from x to the open arc of radius v: the radial foot if the
    // angle of x falls inside the arc, else the nearer endpoint
    double a = phi;
    if (a < th0) a += 2.0 * kPi;
    double cand;
    if (a >= th0 && a <= th1 && r > 0.0)
      cand = v + std::abs(r - v);
    else
      cand = std::min(chord(v, th0), chord(v, th1));
    if (r == 0.0) cand = 2.0 * v;
    best = std::min(best, cand);
    best = std::min(best, chord(p.boundary_values[k], th0));
  }
  return best;
}

namespace {

// per-direction radial trapezoid of max(u - rho, 0) rho^{n-1}
template <int N>
double radial_piece(const ConeProfile<N>& p, const Vec<N>& dir, double rmax, int radial_nodes) {
  double h = rmax / radial_nodes;
  double acc = 0.0;
  for (int j = 0; j <= radial_nodes; ++j) {
    double rho = j * h;
    double u = arrival(p, rho * dir);
    double val = std::max(u - rho, 0.0);
    if (N == 3) val *= rho * rho;
    else val *= rho;
    acc += (j == 0 || j == radial_nodes) ? 0.5 * val : val;
  }
  return acc * h;
}

template <int N>
double volume_impl(const ConeProfile<N>& p, const VolumeOptions<N>& opts, bool parallel) {
  auto dirs = opts.dir_grid ? opts.dir_grid : p.grid;
  if (opts.radial_nodes < 8) throw std::invalid_argument("dod_volume: radial_nodes too small");
  double rmax = p.max_value();
  int nd = dirs->size();
  std::vector<double> partial(nd);
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < nd; ++i)
    partial[i] = radial_piece(p, dirs->node(i), rmax, opts.radial_nodes);
  double total = 0.0;
  for (int i = 0; i < nd; ++i) total += dirs->weight(i) * partial[i];
  return total;
}

}  // namespace

template <int N>
double dod_volume(const ConeProfile<N>& p, const VolumeOptions<N>& opts) {
  return volume_impl(p, opts, par::enabled());
}

template <int N>
double detail::dod_volume_serial(const ConeProfile<N>& p, const VolumeOptions<N>& opts) {
  return volume_impl(p, opts, false);
}

double dod_volume(const SectorProfile& p, int dir_count, int radial_nodes) {
  double rmax = p.max_value();
  double h = rmax / radial_nodes;
  double hth = 2.0 * kPi / dir_count;
  std::vector<double> partial(dir_count);
#pragma omp parallel for schedule(static) if (par::enabled())
  for (int i = 0; i < dir_count; ++i) {
    double th = (i + 0.5) * hth;  // midpoints avoid sitting on jump angles
    Vec<2> dir{std::cos(th), std::sin(th)};
    double acc = 0.0;
    for (int j = 0; j <= radial_nodes; ++j) {
      double rho = j * h;
      double val = std::max(arrival(p, rho * dir) - rho, 0.0) * rho;
      acc += (j == 0 || j == radial_nodes) ? 0.5 * val : val;
    }
    partial[i] = acc * h;
  }
  double total = 0.0;
  for (int i = 0; i < dir_count; ++i) total += hth * partial[i];
  return total;
}

template <int N>
double dod_symdiff(const ConeProfile<N>& p1, const ConeProfile<N>& p2,
                   const VolumeOptions<N>& opts) {
  if (p1.grid != p2.grid) throw std::invalid_argument("dod_symdiff: profiles on different grids");
  auto dirs = opts.dir_grid ? opts.dir_grid : p1.grid;
  double rmax = std::max(p1.max_value(), p2.max_value());
  double h = rmax / opts.radial_nodes;
  int nd = dirs->size();
  std::vector<double> partial(nd);
#pragma omp parallel for schedule(static) if (par::enabled())
  for (int i = 0; i < nd; ++i) {
    const Vec<N> dir = dirs->node(i);
    double acc = 0.0;
    for (int j = 0; j <= opts.radial_nodes; ++j) {
      double rho = j * h;
      Vec<N> x = rho * dir;
      double val = std::abs(arrival(p1, x) - arrival(p2, x));
      val *= (N == 3) ? rho * rho : rho;
      acc += (j == 0 || j == opts.radial_nodes) ? 0.5 * val : val;
    }
    partial[i] = acc * h;
  }
  double total = 0.0;
  for (int i = 0; i < nd; ++i) total += dirs->weight(i) * partial[i];
  return total;
}

template <int N>
ConeProfile<N> future_section(const ConeProfile<N>& p, double delta) {
  if (!(delta > 0.0) || !(delta < p.min_value()))
    throw std::invalid_argument("future_section: need 0 < delta < min f");
  ConeProfile<N> out = p;
  int m = p.grid->size();
#pragma omp parallel for schedule(static) if (par::enabled())
  for (int i = 0; i < m; ++i) {
    const Vec<N> dir = p.grid->node(i);
    // u(rho theta) - rho is nonincreasing in rho (u is 1-Lipschitz)
    double lo = 0.0, hi = p.max_value();
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (lo + hi);
      if (arrival(p, mid * dir) - mid > delta)
        lo = mid;
      else
        hi = mid;
    }
    out.values[i] = 0.5 * (lo + hi);
  }
  return out;
}

template <int N>
double isoperimetric_ratio(const ConeProfile<N>& p, const VolumeOptions<N>& opts) {
  double v = dod_volume(p, opts);
  double perim = perimeter(p);
  double lhs = v / (2.0 * unit_ball_volume(N) / (N + 1));
  double rhs = std::pow(perim / unit_sphere_area(N), double(N + 1) / (N - 1));
  return lhs / rhs;
}

template double arrival(const ConeProfile<2>&, const Vec<2>&);
template double arrival(const ConeProfile<3>&, const Vec<3>&);
template double dod_volume(const ConeProfile<2>&, const VolumeOptions<2>&);
template double dod_volume(const ConeProfile<3>&, const VolumeOptions<3>&);
template double detail::dod_volume_serial(const ConeProfile<2>&, const VolumeOptions<2>&);
template double detail::dod_volume_serial(const ConeProfile<3>&, const VolumeOptions<3>&);
template double dod_symdiff(const ConeProfile<2>&, const ConeProfile<2>&, const VolumeOptions<2>&);
template double dod_symdiff(const ConeProfile<3>&, const ConeProfile<3>&, const VolumeOptions<3>&);
template ConeProfile<2> future_section(const ConeProfile<2>&, double);
template ConeProfile<3> future_section(const ConeProfile<3>&, double);
template double isoperimetric_ratio(const ConeProfile<2>&, const VolumeOptions<2>&);
template double isoperimetric_ratio(const ConeProfile<3>&, const VolumeOptions<3>&);

}  // namespace lcone
