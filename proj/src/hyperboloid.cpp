#include "lcone/hyperboloid.hpp"

#include <algorithm>
#include <cmath>

#include "lcone/parallel.hpp"

namespace lcone {

template <int N>
SVec<N> hyp_point(double s, const Vec<N>& dir) {
  if (s < 0.0) throw std::invalid_argument("hyp_point: s must be nonnegative");
  SVec<N> p;
  p.t = std::cosh(s);
  p.x = std::sinh(s) * normalized(dir);
  return p;
}

template <int N>
double hyp_distance(const SVec<N>& p, const SVec<N>& q, double tol) {
  if (std::abs(minkowski_inner(p, p) + 1.0) > tol || std::abs(minkowski_inner(q, q) + 1.0) > tol)
    throw std::invalid_argument("hyp_distance: point off the unit hyperboloid");
  double c = -minkowski_inner(p, q);
  return std::acosh(std::max(1.0, c));
}

double hyp_ball_volume(int n, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("hyp_ball_volume: delta must be positive");
  if (n == 2) return 2.0 * kPi * (std::cosh(delta) - 1.0);
  if (n == 3) return 2.0 * kPi * (std::sinh(delta) * std::cosh(delta) - delta);
  throw std::invalid_argument("hyp_ball_volume: n must be 2 or 3");
}

double hyp_ball_perimeter(int n, double delta) {
  return unit_sphere_area(n) * std::pow(std::sinh(delta), n - 1);
}

double hyp_ball_radius_for_volume(int n, double volume) {
  if (!(volume > 0.0)) throw std::invalid_argument("hyp_ball_radius_for_volume: volume > 0");
  double lo = 0.0, hi = 1.0;
  while (hyp_ball_volume(n, hi) < volume) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (hyp_ball_volume(n, mid) < volume)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double hyp_diamond_volume_oracle(int n, double delta) {
  return 2.0 * unit_ball_volume(n) * std::pow(std::sinh(delta), n + 1) / (n + 1);
}

double claim1_bound(double volume, int n) {
  if (!(volume > 0.0)) return 0.0;
  double d = hyp_ball_radius_for_volume(n, volume);
  double a = std::pow(std::cosh(d) + std::sinh(d), n + 1);
  double b = std::pow(std::cosh(d) - std::sinh(d), n + 1);
  return volume / (n + 1) * (a - b);
}

PolarGridIndicator::PolarGridIndicator(int ns_, int ntheta_, double smax)
    : ns(ns_), ntheta(ntheta_), s_max(smax) {
  if (ns < 1 || ntheta < 4 || !(smax > 0.0))
    throw std::invalid_argument("PolarGridIndicator: bad resolution");
  occ.assign(static_cast<std::size_t>(ns) * ntheta, 0);
}

double PolarGridIndicator::area() const {
  double a = 0.0;
  for (int is = 0; is < ns; ++is) {
    double w = cell_weight(is);
    for (int it = 0; it < ntheta; ++it)
      if (occ[index(is, it)]) a += w;
  }
  return a;
}

bool PolarGridIndicator::at_point(const SVec<2>& p) const {
  double s = std::acosh(std::max(1.0, p.t));
  if (s >= s_max) return false;
  double th = std::atan2(p.x[1], p.x[0]);
  if (th < 0.0) th += 2.0 * kPi;
  int is = std::min(ns - 1, static_cast<int>(s / ds()));
  int it = std::min(ntheta - 1, static_cast<int>(th / dtheta()));
  return occ[index(is, it)] != 0;
}

template <int N>
bool HyperbolicSet<N>::contains(const SVec<N>& p) const {
  if (is_ball_union()) {
    for (const auto& b : balls())
      if (hyp_distance(p, b.center) < b.radius) return true;
    return false;
  }
  if constexpr (N == 2) return grid().at_point(p);
  return false;
}

template <int N>
bool HyperbolicSet<N>::empty() const {
  if (is_ball_union()) return balls().empty();
  if constexpr (N == 2) {
    for (auto b : grid().occ)
      if (b) return false;
  }
  return true;
}

template <int N>
double HyperbolicSet<N>::support_radius() const {
  SVec<N> e0 = hyp_point<N>(0.0, [] { Vec<N> d{}; d[0] = 1.0; return d; }());
  if (is_ball_union()) {
    double r = 0.0;
    for (const auto& b : balls()) r = std::max(r, hyp_distance(e0, b.center) + b.radius);
    return r;
  }
  if constexpr (N == 2) {
    const auto& g = grid();
    for (int is = g.ns - 1; is >= 0; --is)
      for (int it = 0; it < g.ntheta; ++it)
        if (g.occ[g.index(is, it)]) return (is + 1) * g.ds();
  }
  return 0.0;
}

template <int N>
HyperbolicSet<N> make_ball_union(std::vector<GeodesicBall<N>> balls) {
  for (const auto& b : balls) {
    if (!(b.radius > 0.0)) throw std::invalid_argument("make_ball_union: radius must be positive");
    if (std::abs(minkowski_inner(b.center, b.center) + 1.0) > 1e-10)
      throw std::invalid_argument("make_ball_union: center off the hyperboloid");
  }
  HyperbolicSet<N> e;
  e.rep = std::move(balls);
  return e;
}

HyperbolicSet<2> make_grid_set(PolarGridIndicator grid) {
  HyperbolicSet<2> e;
  e.rep = std::move(grid);
  return e;
}

namespace {

// drop balls nested inside another, then require pairwise disjointness
template <int N>
std::vector<GeodesicBall<N>> disjoint_balls(const std::vector<GeodesicBall<N>>& in,
                                            const char* who) {
  std::vector<GeodesicBall<N>> out;
  for (size_t i = 0; i < in.size(); ++i) {
    bool nested = false;
    for (size_t j = 0; j < in.size() && !nested; ++j) {
      if (i == j) continue;
      double d = hyp_distance(in[i].center, in[j].center);
      if (d + in[i].radius <= in[j].radius + 1e-14 &&
          (in[j].radius > in[i].radius || j < i))
        nested = true;
    }
    if (!nested) out.push_back(in[i]);
  }
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j) {
      double d = hyp_distance(out[i].center, out[j].center);
      if (d < out[i].radius + out[j].radius - 1e-14)
        throw std::invalid_argument(std::string(who) + ": overlapping balls unsupported");
    }
  return out;
}

}  // namespace

template <int N>
double hyp_volume(const HyperbolicSet<N>& E) {
  if (E.is_ball_union()) {
    double v = 0.0;
    for (const auto& b : disjoint_balls(E.balls(), "hyp_volume")) v += hyp_ball_volume(N, b.radius);
    return v;
  }
  if constexpr (N == 2) return E.grid().area();
  throw std::invalid_argument("hyp_volume: unsupported representation");
}

template <int N>
double hyp_perimeter(const HyperbolicSet<N>& E) {
  if (!E.is_ball_union())
    throw std::invalid_argument("hyp_perimeter: unavailable for grid indicators");
  double p = 0.0;
  for (const auto& b : disjoint_balls(E.balls(), "hyp_perimeter"))
    p += hyp_ball_perimeter(N, b.radius);
  return p;
}

namespace {

// Trace of the past (sign = +1) or future (sign = -1) light cone of (t, x)
// on S_{-1}, sampled over directions; true iff every trace point is in E.
template <int N>
bool trace_inside(const HyperbolicSet<N>& E, double t, const Vec<N>& x, int dirs, int sign) {
  double q = t * t - dot(x, x) - 1.0;  // positive above S_{-1}, negative below
  for (int i = 0; i < dirs; ++i) {
    Vec<N> om;
    if constexpr (N == 2) {
      double th = 2.0 * kPi * i / dirs;
      om = Vec<2>{std::cos(th), std::sin(th)};
    } else {
      // spiral point set; adequate for a membership scan
      double z = -1.0 + 2.0 * (i + 0.5) / dirs;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double th = 2.39996322972865332 * i;  // golden angle
      om = Vec<3>{r * std::cos(th), r * std::sin(th), z};
    }
    double denom = sign > 0 ? (t + dot(x, om)) : (t - dot(x, om));
    double rho = sign > 0 ? q / (2.0 * denom) : -q / (2.0 * denom);
    if (!(rho >= 0.0) || !std::isfinite(rho)) return false;
    SVec<N> y;
    y.t = t - sign * rho;
    y.x = x + rho * om;
    if (!E.contains(y)) return false;
  }
  return true;
}

}  // namespace

template <int N>
double hyp_u_plus(const HyperbolicSet<N>& E, const Vec<N>& x, const HypVolumeOptions& opts) {
  double t0 = std::sqrt(1.0 + dot(x, x));
  SVec<N> base;
  base.t = t0;
  base.x = x;
  if (!E.contains(base)) return t0;
  double s_reach = E.support_radius();
  double hi = t0 * std::exp(s_reach) + 1.0;
  while (trace_inside(E, hi, x, opts.trace_dirs, +1)) hi *= 2.0;
  double lo = t0;
  while (hi - lo > opts.bisect_tol) {
    double mid = 0.5 * (lo + hi);
    if (trace_inside(E, mid, x, opts.trace_dirs, +1))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

template <int N>
double hyp_u_minus(const HyperbolicSet<N>& E, const Vec<N>& x, const HypVolumeOptions& opts) {
  double t0 = std::sqrt(1.0 + dot(x, x));
  SVec<N> base;
  base.t = t0;
  base.x = x;
  if (!E.contains(base)) return t0;
  double lo = norm(x) + 1e-12;  // D(E) stays above the light cone of the origin
  double hi = t0;
  if (trace_inside(E, lo, x, opts.trace_dirs, -1)) return lo;
  while (hi - lo > opts.bisect_tol) {
    double mid = 0.5 * (lo + hi);
    if (trace_inside(E, mid, x, opts.trace_dirs, -1))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

template <int N>
double hyp_dod_volume(const HyperbolicSet<N>& E, const HypVolumeOptions& opts) {
  if (E.empty()) return 0.0;
  // E is contained in the ball B_{s_reach}(e0), whose domain of dependence is
  // the causal diamond with spatial extent sinh(s_reach).
  double s_reach = E.support_radius();
  double X = opts.box_pad * std::sinh(s_reach);
  int m = opts.spatial_cells;
  double h = 2.0 * X / m;

  std::int64_t columns = 1;
  for (int k = 0; k < N; ++k) columns *= m;
  std::vector<double> partial(columns);
#pragma omp parallel for schedule(static) if (par::enabled())
  for (std::int64_t col = 0; col < columns; ++col) {
    std::int64_t rest = col;
    Vec<N> x;
    for (int k = N - 1; k >= 0; --k) {
      x[k] = -X + (static_cast<int>(rest % m) + 0.5) * h;
      rest /= m;
    }
    if (norm(x) > std::sinh(s_reach)) {
      partial[col] = 0.0;
      continue;
    }
    double up = hyp_u_plus(E, x, opts);
    double um = hyp_u_minus(E, x, opts);
    partial[col] = std::max(up - um, 0.0);
  }
  double cell = std::pow(h, N);
  double total = 0.0;
  for (std::int64_t col = 0; col < columns; ++col) total += partial[col];
  return total * cell;
}

template <int N>
HypIsoperimetricResult hyp_isoperimetric_check(const HyperbolicSet<N>& E,
                                               const HypVolumeOptions& opts) {
  double v = hyp_dod_volume(E, opts);
  double p = hyp_perimeter(E);
  HypIsoperimetricResult r{};
  r.lhs = v / (2.0 * unit_ball_volume(N) / (N + 1));
  r.rhs = std::pow(p / unit_sphere_area(N), double(N + 1) / (N - 1));
  r.ratio = r.lhs / r.rhs;
  return r;
}

HyperbolicSet<2> hyp_polarize(const HyperbolicSet<2>& E, const ReflectionPlane<2>& plane) {
  if (E.is_ball_union())
    throw std::invalid_argument("hyp_polarize: grid-indicator representation required");
  const PolarGridIndicator& g = E.grid();
  PolarGridIndicator out = g;
  for (int is = 0; is < g.ns; ++is) {
    double s = (is + 0.5) * g.ds();
    for (int it = 0; it < g.ntheta; ++it) {
      double th = (it + 0.5) * g.dtheta();
      SVec<2> p = hyp_point<2>(s, Vec<2>{std::cos(th), std::sin(th)});
      SVec<2> q = reflect(p, plane);
      bool self = g.occ[g.index(is, it)] != 0;
      if (self && std::acosh(std::max(1.0, q.t)) >= g.s_max)
        throw std::runtime_error("hyp_polarize: reflected point beyond s_max");
      bool mirror = g.at_point(q);
      switch (side_of(p, plane)) {
        case Side::plus:
          out.occ[out.index(is, it)] = (self || mirror) ? 1 : 0;
          break;
        case Side::minus:
          out.occ[out.index(is, it)] = (self && mirror) ? 1 : 0;
          break;
        case Side::on:
          break;
      }
    }
  }
  return make_grid_set(std::move(out));
}

template SVec<2> hyp_point(double, const Vec<2>&);
template SVec<3> hyp_point(double, const Vec<3>&);
template double hyp_distance(const SVec<2>&, const SVec<2>&, double);
template double hyp_distance(const SVec<3>&, const SVec<3>&, double);
template struct HyperbolicSet<2>;
template struct HyperbolicSet<3>;
template HyperbolicSet<2> make_ball_union(std::vector<GeodesicBall<2>>);
template HyperbolicSet<3> make_ball_union(std::vector<GeodesicBall<3>>);
template double hyp_volume(const HyperbolicSet<2>&);
template double hyp_volume(const HyperbolicSet<3>&);
template double hyp_perimeter(const HyperbolicSet<2>&);
template double hyp_perimeter(const HyperbolicSet<3>&);
template double hyp_u_plus(const HyperbolicSet<2>&, const Vec<2>&, const HypVolumeOptions&);
template double hyp_u_plus(const HyperbolicSet<3>&, const Vec<3>&, const HypVolumeOptions&);
template double hyp_u_minus(const HyperbolicSet<2>&, const Vec<2>&, const HypVolumeOptions&);
template double hyp_u_minus(const HyperbolicSet<3>&, const Vec<3>&, const HypVolumeOptions&);
template double hyp_dod_volume(const HyperbolicSet<2>&, const HypVolumeOptions&);
template double hyp_dod_volume(const HyperbolicSet<3>&, const HypVolumeOptions&);
template HypIsoperimetricResult hyp_isoperimetric_check(const HyperbolicSet<2>&,
                                                        const HypVolumeOptions&);
template HypIsoperimetricResult hyp_isoperimetric_check(const HyperbolicSet<3>&,
                                                        const HypVolumeOptions&);

}  // namespace lcone
