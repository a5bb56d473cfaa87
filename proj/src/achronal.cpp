#include "lcone/achronal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <type_traits>

#include "lcone/parallel.hpp"

namespace lcone {

// ---------------------------------------------------------------------------
// masks
// ---------------------------------------------------------------------------

namespace {

// Green's theorem contribution of the directed segment a -> b to the area of
// (polygon cap disk), disk of radius r at the origin.
double edge_contribution(double ax, double ay, double bx, double by, double r) {
  auto arc = [&](double ux, double uy, double vx, double vy) {
    return 0.5 * r * r * std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
  };
  double dx = bx - ax, dy = by - ay;
  double A = dx * dx + dy * dy;
  if (A < 1e-30) return 0.0;
  double B = 2.0 * (ax * dx + ay * dy);
  double C = ax * ax + ay * ay - r * r;
  double disc = B * B - 4.0 * A * C;
  if (disc <= 0.0) return arc(ax, ay, bx, by);
  double sq = std::sqrt(disc);
  double t1 = (-B - sq) / (2.0 * A);
  double t2 = (-B + sq) / (2.0 * A);
  if (t2 <= 0.0 || t1 >= 1.0) return arc(ax, ay, bx, by);
  double ta = std::max(t1, 0.0), tb = std::min(t2, 1.0);
  double px = ax + ta * dx, py = ay + ta * dy;
  double qx = ax + tb * dx, qy = ay + tb * dy;
  return arc(ax, ay, px, py) + 0.5 * (px * qy - py * qx) + arc(qx, qy, bx, by);
}

}  // namespace

double circle_rect_overlap(double cx, double cy, double r, double x0, double x1, double y0,
                           double y1) {
  // translate so the disk sits at the origin; rectangle ccw
  double xs[5] = {x0 - cx, x1 - cx, x1 - cx, x0 - cx, x0 - cx};
  double ys[5] = {y0 - cy, y0 - cy, y1 - cy, y1 - cy, y0 - cy};
  double a = 0.0;
  for (int e = 0; e < 4; ++e) a += edge_contribution(xs[e], ys[e], xs[e + 1], ys[e + 1], r);
  return std::max(0.0, a);
}

namespace {

template <int N>
double subsample_coverage(const std::function<bool(const Vec<N>&)>& inside, const Vec<N>& lo,
                          const Vec<N>& hi, int sub) {
  std::int64_t total = 1, hits = 0;
  for (int k = 0; k < N; ++k) total *= sub;
  std::array<int, N> ix{};
  for (std::int64_t c = 0; c < total; ++c) {
    std::int64_t rest = c;
    Vec<N> p;
    for (int k = N - 1; k >= 0; --k) {
      ix[k] = static_cast<int>(rest % sub);
      rest /= sub;
      p[k] = lo[k] + (ix[k] + 0.5) * (hi[k] - lo[k]) / sub;
    }
    if (inside(p)) ++hits;
  }
  double vol = 1.0;
  for (int k = 0; k < N; ++k) vol *= hi[k] - lo[k];
  return vol * static_cast<double>(hits) / static_cast<double>(total);
}

}  // namespace

template <int N>
double mask_coverage(const Mask<N>& mask, const Vec<N>& lo, const Vec<N>& hi) {
  double vol = 1.0;
  for (int k = 0; k < N; ++k) vol *= hi[k] - lo[k];
  if (vol <= 0.0) return 0.0;
  if (std::holds_alternative<AllMask>(mask)) return vol;
  if (const auto* d = std::get_if<DiskMask<N>>(&mask)) {
    if constexpr (N == 2) {
      return circle_rect_overlap(d->center[0], d->center[1], d->radius, lo[0], hi[0], lo[1],
                                 hi[1]);
    } else {
      auto inside = [d](const Vec<N>& p) { return norm(p - d->center) <= d->radius; };
      return subsample_coverage<N>(inside, lo, hi, 6);
    }
  }
  const auto& pm = std::get<PredicateMask<N>>(mask);
  return subsample_coverage<N>(pm.inside, lo, hi, pm.subsamples);
}

template <int N>
bool mask_contains(const Mask<N>& mask, const Vec<N>& p) {
  if (std::holds_alternative<AllMask>(mask)) return true;
  if (const auto* d = std::get_if<DiskMask<N>>(&mask)) return norm(p - d->center) <= d->radius;
  return std::get<PredicateMask<N>>(mask).inside(p);
}

template bool mask_contains(const Mask<2>&, const Vec<2>&);
template bool mask_contains(const Mask<3>&, const Vec<3>&);

// ---------------------------------------------------------------------------
// flat chart
// ---------------------------------------------------------------------------

template <int N>
FlatGraph<N>::FlatGraph(const Vec<N>& lo_, const Vec<N>& hi_, const std::array<int, N>& nodes_)
    : lo(lo_), hi(hi_), nodes(nodes_) {
  std::size_t total = 1;
  for (int k = 0; k < N; ++k) {
    if (nodes[k] < 2 || !(hi[k] > lo[k])) throw std::invalid_argument("FlatGraph: bad lattice");
    total *= nodes[k];
  }
  values.assign(total, 0.0);
}

template <int N>
std::size_t FlatGraph<N>::index(const std::array<int, N>& ix) const {
  std::size_t id = 0;
  for (int k = 0; k < N; ++k) id = id * nodes[k] + ix[k];
  return id;
}

template <int N>
Vec<N> FlatGraph<N>::point(const std::array<int, N>& ix) const {
  Vec<N> p;
  for (int k = 0; k < N; ++k) p[k] = lo[k] + ix[k] * spacing(k);
  return p;
}

namespace {

template <int N, typename Fn>
void for_each_node(const FlatGraph<N>& g, Fn&& fn) {
  std::array<int, N> ix{};
  while (true) {
    fn(ix);
    int k = N - 1;
    while (k >= 0 && ++ix[k] == g.nodes[k]) ix[k--] = 0;
    if (k < 0) break;
  }
}

template <int N>
std::array<double, N> gradient_at(const FlatGraph<N>& g,
                                  const std::type_identity_t<std::array<int, N>>& ix) {
  std::array<double, N> grad{};
  for (int k = 0; k < N; ++k) {
    double h = g.spacing(k);
    auto up = ix, dn = ix;
    if (ix[k] + 1 < g.nodes[k]) up[k] = ix[k] + 1;
    if (ix[k] > 0) dn[k] = ix[k] - 1;
    grad[k] = (g.at(up) - g.at(dn)) / ((up[k] - dn[k]) * h);
  }
  return grad;
}

}  // namespace

template <int N>
void FlatGraph<N>::validate_lipschitz(double tol) const {
  for_each_node(*this, [&](const std::array<int, N>& ix) {
    for (int k = 0; k < N; ++k) {
      if (ix[k] + 1 >= nodes[k]) continue;
      auto jx = ix;
      jx[k] += 1;
      if (std::abs(at(jx) - at(ix)) > spacing(k) * (1.0 + tol))
        throw std::runtime_error("FlatGraph: Lipschitz violation on adjacent nodes");
    }
  });
}

template <int N>
double area_flat(const FlatGraph<N>& g, const Mask<N>& mask) {
  g.validate_lipschitz();
  double area = 0.0;
  for_each_node(g, [&](const std::array<int, N>& ix) {
    Vec<N> p = g.point(ix);
    Vec<N> clo, chi;
    for (int k = 0; k < N; ++k) {
      double h = g.spacing(k);
      clo[k] = std::max(g.lo[k], p[k] - 0.5 * h);
      chi[k] = std::min(g.hi[k], p[k] + 0.5 * h);
    }
    double cov = mask_coverage(mask, clo, chi);
    if (cov <= 0.0) return;
    auto grad = gradient_at(g, ix);
    double g2 = 0.0;
    for (int k = 0; k < N; ++k) g2 += grad[k] * grad[k];
    if (g2 > 1.0 + 1e-9)
      throw std::runtime_error("area_flat: gradient exceeds the null slope beyond tolerance");
    area += cov * std::sqrt(std::max(0.0, 1.0 - g2));
  });
  return area;
}

template <int N>
FlatGraph<N> polarize_graph(const FlatGraph<N>& g, Side toward) {
  if (toward == Side::on) throw std::invalid_argument("polarize_graph: side must be plus or minus");
  if (std::abs(g.lo[0] + g.hi[0]) > 1e-12)
    throw std::invalid_argument("polarize_graph: lattice not symmetric about x1 = 0");
  FlatGraph<N> out = g;
  for_each_node(g, [&](const std::array<int, N>& ix) {
    auto mx = ix;
    mx[0] = g.nodes[0] - 1 - ix[0];
    double a = g.at(ix), b = g.at(mx);
    double x1 = g.point(ix)[0];
    bool keep_max = toward == Side::plus ? (x1 > 0.0) : (x1 < 0.0);
    if (x1 == 0.0)
      out.at(ix) = a;
    else
      out.at(ix) = keep_max ? std::max(a, b) : std::min(a, b);
  });
  return out;
}

namespace {

template <int N>
struct SourcePoint {
  Vec<N> x;
  double nu;
};

template <int N>
std::vector<SourcePoint<N>> masked_sources(const FlatGraph<N>& g) {
  std::vector<SourcePoint<N>> pts;
  for_each_node(g, [&](const std::array<int, N>& ix) {
    Vec<N> p = g.point(ix);
    if (!mask_contains(g.mask, p)) return;
    double nu = g.at(ix);
    if (nu < norm(p) - 1e-9 * std::max(1.0, norm(p)))
      throw std::runtime_error("null_extension: graph dips below the light cone of the origin");
    pts.push_back({p, nu});
  });
  return pts;
}

template <int N>
FlatGraph<N> extension_from_sources(std::vector<SourcePoint<N>> pts, double R, int out_nodes,
                                    bool prune) {
  if (prune)
    std::sort(pts.begin(), pts.end(),
              [](const SourcePoint<N>& a, const SourcePoint<N>& b) { return a.nu < b.nu; });
  Vec<N> lo, hi;
  std::array<int, N> nn{};
  for (int k = 0; k < N; ++k) {
    lo[k] = -R;
    hi[k] = R;
    nn[k] = out_nodes;
  }
  FlatGraph<N> out(lo, hi, nn);
  std::int64_t total = 1;
  for (int k = 0; k < N; ++k) total *= out_nodes;
#pragma omp parallel for schedule(static) if (par::enabled())
  for (std::int64_t c = 0; c < total; ++c) {
    std::array<int, N> ix{};
    std::int64_t rest = c;
    for (int k = N - 1; k >= 0; --k) {
      ix[k] = static_cast<int>(rest % out_nodes);
      rest /= out_nodes;
    }
    Vec<N> x = out.point(ix);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& sp : pts) {
      if (prune && sp.nu >= best) break;  // sorted by nu; |x - x_p| >= 0
      best = std::min(best, sp.nu + norm(x - sp.x));
    }
    out.at(ix) = std::max(norm(x), best);
  }
  return out;
}

}  // namespace

template <int N>
FlatGraph<N> null_extension(const FlatGraph<N>& g, double box_radius, int out_nodes) {
  return extension_from_sources(masked_sources(g), box_radius, out_nodes, true);
}

template <int N>
FlatGraph<N> detail::null_extension_bruteforce(const FlatGraph<N>& g, double box_radius,
                                               int out_nodes) {
  return extension_from_sources(masked_sources(g), box_radius, out_nodes, false);
}

// ---------------------------------------------------------------------------
// hyperbolic chart
// ---------------------------------------------------------------------------

HypGraph::HypGraph(int dim_, int ns_, int ntheta_, double smax)
    : dim(dim_), ns(ns_), ntheta(ntheta_), s_max(smax) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("HypGraph: dim must be 2 or 3");
  if (ns < 8 || ntheta < 8 || !(smax > 0.0)) throw std::invalid_argument("HypGraph: bad grid");
  f.assign(static_cast<std::size_t>(ns + 1) * ntheta, 1.0);
}

namespace {

double theta_weight(const HypGraph& g, int it) {
  if (g.dim == 2) return g.dtheta();
  // axisymmetric n = 3: dvol over S^2 is 2 pi sin(theta) dtheta, trapezoid
  double w = (it == 0 || it == g.ntheta - 1) ? 0.5 : 1.0;
  return 2.0 * kPi * std::sin(g.theta_at(it)) * g.dtheta() * w;
}

// |d log f|^2 in the hyperbolic metric at an interior grid point
double grad_logf_sq(const HypGraph& g, int is, int it) {
  double hs = g.ds(), hth = g.dtheta();
  auto lf = [&](int i, int j) {
    if (g.dim == 2)
      j = (j % g.ntheta + g.ntheta) % g.ntheta;
    else
      j = std::clamp(j, 0, g.ntheta - 1);
    i = std::clamp(i, 0, g.ns);
    return std::log(g.f[g.index(i, j)]);
  };
  int i0 = std::max(0, is - 1), i1 = std::min(g.ns, is + 1);
  double gs = (lf(i1, it) - lf(i0, it)) / ((i1 - i0) * hs);
  double gth;
  if (g.dim == 2) {
    gth = (lf(is, it + 1) - lf(is, it - 1)) / (2.0 * hth);
  } else {
    int j0 = std::max(0, it - 1), j1 = std::min(g.ntheta - 1, it + 1);
    gth = (lf(is, j1) - lf(is, j0)) / ((j1 - j0) * hth);
  }
  double sh = std::sinh(g.s_at(is));
  return gs * gs + (sh > 0.0 ? gth * gth / (sh * sh) : 0.0);
}

}  // namespace

HypAreaResult area_hyperbolic(const HypGraph& g) {
  HypAreaResult res;
  int n = g.dim;
  double hs = g.ds();
  double area = 0.0;
  for (int is = 1; is <= g.ns; ++is) {
    double s = g.s_at(is);
    double ws = (is == g.ns) ? 0.5 : 1.0;  // trapezoid in s; is = 0 has sinh(0) = 0
    double shn = std::pow(std::sinh(s), n - 1);
    for (int it = 0; it < g.ntheta; ++it) {
      double q = grad_logf_sq(g, is, it);
      if (q > 1.0 + 1e-9)
        throw std::runtime_error("area_hyperbolic: |d log f| exceeds 1 beyond tolerance");
      double fv = g.f[g.index(is, it)];
      area += ws * hs * theta_weight(g, it) * std::pow(fv, n) *
              std::sqrt(std::max(0.0, 1.0 - q)) * shn;
    }
  }
  res.area = area;

  // tail beyond s_max, assuming f <= c e^{-s} with c estimated on the last row
  double c_est = 0.0;
  for (int it = 0; it < g.ntheta; ++it)
    c_est = std::max(c_est, g.f[g.index(g.ns, it)] * std::exp(g.s_max));
  res.tail_bound = unit_sphere_area(n) * std::pow(c_est, n) * std::pow(2.0, 1 - n) *
                   std::exp(-g.s_max);
  return res;
}

std::vector<double> f_infinity(const HypGraph& g, double window) {
  int step = std::max(1, static_cast<int>(std::lround(window / g.ds())));
  if (2 * step > g.ns) throw std::invalid_argument("f_infinity: window larger than the grid");
  std::vector<double> out(g.ntheta);
  for (int it = 0; it < g.ntheta; ++it) {
    auto F = [&](int back) {
      int is = g.ns - back * step;
      return g.f[g.index(is, it)] * std::cosh(g.s_at(is));
    };
    double f1 = F(2), f2 = F(1), f3 = F(0);
    if (std::abs(f3 - f2) > 1e-4 * std::max(std::abs(f3), 1e-12))
      throw std::runtime_error("f_infinity: non-convergent tail");
    double den = (f3 - f2) - (f2 - f1);
    out[it] = std::abs(den) < 1e-300 ? f3 : f3 - (f3 - f2) * (f3 - f2) / den;
    if (!(out[it] > 0.0)) out[it] = f3;
  }
  return out;
}

double f_infinity_perimeter(const HypGraph& g, const std::vector<double>& f_inf) {
  double p = 0.0;
  for (int it = 0; it < g.ntheta; ++it)
    p += theta_weight(g, it) * std::pow(f_inf[it], g.dim - 1);
  return p;
}

// ---------------------------------------------------------------------------
// theorem checks
// ---------------------------------------------------------------------------

template <int N>
BoundCheck check_thm_8_1(const FlatGraph<N>& g, const ConeProfile<N>& p, double containment_tol) {
  BoundCheck r;
  r.area = area_flat(g, g.mask);
  double perim = perimeter(p);
  r.bound = unit_ball_volume(N) * std::pow(perim / unit_sphere_area(N), double(N) / (N - 1));
  r.ratio = r.area / r.bound;
  r.contained = true;
  for_each_node(g, [&](const std::array<int, N>& ix) {
    Vec<N> x = g.point(ix);
    if (!mask_contains(g.mask, x)) return;
    double nu = g.at(ix);
    if (nu <= norm(x) + containment_tol) return;  // on the null part
    if (nu > arrival(p, x) + containment_tol) r.contained = false;
  });
  return r;
}

BoundCheck check_cor_8_10(const HypGraph& g) {
  BoundCheck r;
  auto a = area_hyperbolic(g);
  auto fi = f_infinity(g);
  double perim = f_infinity_perimeter(g, fi);
  int n = g.dim;
  r.area = a.area / unit_ball_volume(n);
  r.bound = std::pow(perim / unit_sphere_area(n), double(n) / (n - 1));
  r.ratio = r.area / r.bound;
  return r;
}

PushResult push_to_hyperboloid(const FlatGraph<2>& g, int patch_ns, int patch_ntheta) {
  PushResult res;
  res.area_original = area_flat(g, g.mask);

  // classify nodes; collect the below part
  std::vector<SourcePoint<2>> below;
  for_each_node(g, [&](const std::array<int, 2>& ix) {
    Vec<2> x = g.point(ix);
    if (!mask_contains(g.mask, x)) return;
    double nu = g.at(ix);
    if (nu < std::sqrt(1.0 + dot(x, x)) - 1e-12) below.push_back({x, nu});
  });

  // flat-chart area of the part on or above the hyperboloid
  PredicateMask<2> above_mask{[&](const Vec<2>& x) {
                                if (!mask_contains(g.mask, x)) return false;
                                // nearest-node height
                                std::array<int, 2> ix{};
                                for (int k = 0; k < 2; ++k) {
                                  int i = static_cast<int>(
                                      std::lround((x[k] - g.lo[k]) / g.spacing(k)));
                                  ix[k] = std::clamp(i, 0, g.nodes[k] - 1);
                                }
                                return g.at(ix) >= std::sqrt(1.0 + dot(x, x)) - 1e-12;
                              },
                              4};
  res.area_above = area_flat(g, Mask<2>{above_mask});

  if (below.empty()) {
    res.patch_area = 0.0;
    res.area_pushed = res.area_above;
    res.patch = PolarGridIndicator(8, 8, 1.0);
    return res;
  }

  // reachable s: e^{-s} > nu - |x| along the aligned direction
  double s_need = 0.0;
  for (const auto& q : below) {
    double gap = std::max(1e-9, q.nu - norm(q.x));
    s_need = std::max(s_need, -std::log(gap) + 0.2);
  }
  s_need = std::min(s_need, 12.0);
  PolarGridIndicator patch(patch_ns, patch_ntheta, s_need);
  for (int is = 0; is < patch.ns; ++is) {
    double s = (is + 0.5) * patch.ds();
    double ch = std::cosh(s), sh = std::sinh(s);
    for (int it = 0; it < patch.ntheta; ++it) {
      double th = (it + 0.5) * patch.dtheta();
      Vec<2> w{sh * std::cos(th), sh * std::sin(th)};
      bool reach = false;
      for (const auto& q : below) {
        if (ch - q.nu > norm(w - q.x)) {
          reach = true;
          break;
        }
      }
      if (reach) patch.occ[patch.index(is, it)] = 1;
    }
  }
  res.patch_area = patch.area();
  res.area_pushed = res.area_above + res.patch_area;
  res.patch = std::move(patch);
  return res;
}

template <int N>
DiskBoundCheck check_thm_9_1(const FlatGraph<N>& g, const HyperbolicSet<N>& E,
                             const HypVolumeOptions& opts, double containment_tol) {
  DiskBoundCheck r;
  r.area = area_flat(g, g.mask);
  double perim = hyp_perimeter(E);
  int n = N;
  r.bound_perimeter =
      unit_ball_volume(n) * std::pow(perim / unit_sphere_area(n), double(n) / (n - 1));
  double rE = hyp_ball_radius_for_volume(n, hyp_volume(E));
  r.bound_disk = unit_ball_volume(n) * std::pow(std::sinh(rE), n);
  r.contained = true;
  for_each_node(g, [&](const std::array<int, N>& ix) {
    Vec<N> x = g.point(ix);
    if (!mask_contains(g.mask, x)) return;
    double nu = g.at(ix);
    double up = hyp_u_plus(E, x, opts);
    double um = hyp_u_minus(E, x, opts);
    if (nu > up + containment_tol || nu < um - containment_tol) r.contained = false;
  });
  return r;
}

template double mask_coverage(const Mask<2>&, const Vec<2>&, const Vec<2>&);
template double mask_coverage(const Mask<3>&, const Vec<3>&, const Vec<3>&);
template struct FlatGraph<2>;
template struct FlatGraph<3>;
template double area_flat(const FlatGraph<2>&, const Mask<2>&);
template double area_flat(const FlatGraph<3>&, const Mask<3>&);
template FlatGraph<2> polarize_graph(const FlatGraph<2>&, Side);
template FlatGraph<3> polarize_graph(const FlatGraph<3>&, Side);
template FlatGraph<2> null_extension(const FlatGraph<2>&, double, int);
template FlatGraph<3> null_extension(const FlatGraph<3>&, double, int);
template FlatGraph<2> detail::null_extension_bruteforce(const FlatGraph<2>&, double, int);
template FlatGraph<3> detail::null_extension_bruteforce(const FlatGraph<3>&, double, int);
template BoundCheck check_thm_8_1(const FlatGraph<2>&, const ConeProfile<2>&, double);
template BoundCheck check_thm_8_1(const FlatGraph<3>&, const ConeProfile<3>&, double);
template DiskBoundCheck check_thm_9_1(const FlatGraph<2>&, const HyperbolicSet<2>&,
                                      const HypVolumeOptions&, double);
template DiskBoundCheck check_thm_9_1(const FlatGraph<3>&, const HyperbolicSet<3>&,
                                      const HypVolumeOptions&, double);

}  // namespace lcone
