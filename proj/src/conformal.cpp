#include "lcone/conformal.hpp"

#include <cmath>

namespace lcone {

template <int N>
double conformal_factor(const SVec<N>& w, const Vec<N>& dir) {
  return 1.0 - 2.0 * (dot(dir, w.x) - w.t) * w.t;
}

template <int N>
Vec<N> conformal_image(const SVec<N>& w, const Vec<N>& dir) {
  double a = dot(dir, w.x) - w.t;  // eta((1, dir), w)
  double lam = 1.0 - 2.0 * a * w.t;
  Vec<N> img = dir - (2.0 * a) * w.x;
  return (1.0 / lam) * img;
}

template <int N>
ConformalReflection<N>::ConformalReflection(const ReflectionPlane<N>& plane,
                                            std::shared_ptr<const SphereGrid<N>> grid)
    : plane_(plane), grid_(std::move(grid)) {
  int m = grid_->size();
  lambda_.resize(m);
  lambda_image_.resize(m);
  image_.resize(m);
  side_.resize(m);
  const SVec<N>& w = plane_.normal();
  for (int i = 0; i < m; ++i) {
    const Vec<N>& th = grid_->node(i);
    lambda_[i] = conformal_factor(w, th);
    if (!(lambda_[i] > 0.0))
      throw std::runtime_error("ConformalReflection: nonpositive conformal factor");
    image_[i] = normalized(conformal_image(w, th));
    lambda_image_[i] = conformal_factor(w, image_[i]);
    SVec<N> ray;
    ray.t = 1.0;
    ray.x = th;
    side_[i] = side_of(ray, plane_);
  }
}

template <int N>
ConeProfile<N> reflect_profile(const ConeProfile<N>& p, const ConformalReflection<N>& cr) {
  if (p.grid != cr.grid())
    throw std::invalid_argument("reflect_profile: profile and reflection use different grids");
  ConeProfile<N> out = p;
  for (int i = 0; i < p.grid->size(); ++i)
    out.values[i] = cr.lambda_at_image(i) * p.grid->interpolate(p.values, cr.image(i));
  return out;
}

template <int N>
ConeProfile<N> polarize_profile(const ConeProfile<N>& p, const ConformalReflection<N>& cr) {
  ConeProfile<N> g = reflect_profile(p, cr);
  ConeProfile<N> out = p;
  for (int i = 0; i < p.grid->size(); ++i) {
    switch (cr.ray_side(i)) {
      case Side::plus:
        out.values[i] = std::max(p.values[i], g.values[i]);
        break;
      case Side::minus:
        out.values[i] = std::min(p.values[i], g.values[i]);
        break;
      case Side::on:
        out.values[i] = p.values[i];
        break;
    }
  }
  return out;
}

template <int N>
ConeProfile<N> symmetrize_profile(const ConeProfile<N>& p, const ReflectionPlane<N>& plane,
                                  SymmetrizeSign sign) {
  ConformalReflection<N> cr(plane, p.grid);
  ConeProfile<N> g = reflect_profile(p, cr);
  ConeProfile<N> out = p;
  const SVec<N>& w = plane.normal();
  for (int i = 0; i < p.grid->size(); ++i) {
    // side of the null ray relative to w itself (H_w^+ contains w)
    double s = dot(p.grid->node(i), w.x) - w.t;
    bool keep = sign == SymmetrizeSign::plus ? (s >= 0.0) : (s <= 0.0);
    out.values[i] = keep ? p.values[i] : g.values[i];
  }
  return out;
}

namespace {

// Minkowski-orthonormal frame (tau future timelike, sigma spacelike) of the
// timelike 2-plane span{a, b}.
template <int N>
void timelike_plane_frame(const SVec<N>& a, const SVec<N>& b, SVec<N>& tau, SVec<N>& sigma) {
  double gaa = minkowski_inner(a, a);
  double gab = minkowski_inner(a, b);
  double gbb = minkowski_inner(b, b);
  if (!(gaa * gbb - gab * gab < 0.0))
    throw std::invalid_argument("equal_perimeter_plane: 2-plane is not timelike");
  // minimise eta(u,u) over u = cos(phi) a + sin(phi) b
  double phi = 0.5 * std::atan2(2.0 * gab, gaa - gbb) + 0.5 * kPi;
  SVec<N> u = std::cos(phi) * a + std::sin(phi) * b;
  if (!(minkowski_inner(u, u) < 0.0)) {
    phi += 0.5 * kPi;
    u = std::cos(phi) * a + std::sin(phi) * b;
  }
  if (!(minkowski_inner(u, u) < 0.0))
    throw std::invalid_argument("equal_perimeter_plane: no timelike direction found");
  tau = (1.0 / std::sqrt(-minkowski_inner(u, u))) * u;
  if (tau.t < 0.0) tau = -tau;
  SVec<N> s0 = std::cos(phi + 0.5 * kPi) * a + std::sin(phi + 0.5 * kPi) * b;
  SVec<N> s1 = s0 + minkowski_inner(s0, tau) * tau;  // eta(tau,tau) = -1
  double ss = minkowski_inner(s1, s1);
  if (!(ss > 0.0)) throw std::invalid_argument("equal_perimeter_plane: degenerate 2-plane");
  sigma = (1.0 / std::sqrt(ss)) * s1;
}

}  // namespace

template <int N>
EqualPerimeterPlane<N> equal_perimeter_plane(const ConeProfile<N>& p, const SVec<N>& a,
                                             const SVec<N>& b, const SVec<N>& v) {
  SVec<N> tau, sigma;
  timelike_plane_frame(a, b, tau, sigma);

  std::vector<double> q(p.values.size());
  for (size_t i = 0; i < q.size(); ++i)
    q[i] = N == 2 ? p.values[i] : p.values[i] * p.values[i];

  auto normal_at = [&](double s) { return std::sinh(s) * tau + std::cosh(s) * sigma; };
  auto gap = [&](double s) {
    auto sp = p.grid->half_split(q, normal_at(s));
    return 0.5 * (sp.plus - sp.minus);  // zero at the equal split
  };

  // The plus side shrinks monotonically as s grows; widen the bracket until
  // the gap changes sign, treating a flat profile (gap == 0 everywhere on the
  // axis family) as already solved.
  auto sp0 = p.grid->half_split(q, normal_at(0.0));
  double total = sp0.plus + sp0.minus;
  double tol = 0.5e-10 * total;

  double s_root = 0.0;
  if (std::abs(gap(0.0)) > tol) {
    double s_lo = -5.0, s_hi = 5.0;
    double g_lo = gap(s_lo), g_hi = gap(s_hi);
    int widen = 0;
    while (g_lo * g_hi > 0.0 && std::abs(g_lo) > tol && std::abs(g_hi) > tol && widen < 5) {
      s_lo *= 2.0;
      s_hi *= 2.0;
      g_lo = gap(s_lo);
      g_hi = gap(s_hi);
      ++widen;
    }
    if (std::abs(g_lo) <= tol) {
      s_root = s_lo;
    } else if (std::abs(g_hi) <= tol) {
      s_root = s_hi;
    } else if (g_lo * g_hi <= 0.0) {
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (s_lo + s_hi);
        double gm = gap(mid);
        s_root = mid;
        if (std::abs(gm) <= tol) break;
        if ((gm > 0.0) == (g_lo > 0.0)) {
          s_lo = mid;
          g_lo = gm;
        } else {
          s_hi = mid;
        }
      }
    } else {
      throw std::runtime_error("equal_perimeter_plane: split function does not change sign");
    }
  }

  SVec<N> w = normal_at(s_root);
  w = (1.0 / std::sqrt(minkowski_inner(w, w))) * w;
  auto sp = p.grid->half_split(q, w);

  double scale = std::abs(minkowski_inner(v, w));
  bool admissible = scale >= 1e-9;
  SVec<N> v_used = v;
  if (!admissible) {
    // plane contains v; nudge the polariser off the plane for constructing a
    // valid ReflectionPlane (symmetrisation uses only the normal)
    v_used = v + 0.05 * w;
  }
  return EqualPerimeterPlane<N>{w, ReflectionPlane<N>(w, v_used), admissible, sp.plus, sp.minus};
}

template <int N>
Z2nResult<N> z2n_symmetrize(const ConeProfile<N>& p) {
  Z2nResult<N> res;
  res.profile = p;
  std::vector<SVec<N>> normals;

  auto project_out = [&](SVec<N> u) {
    for (const auto& w : normals) u = u - minkowski_inner(u, w) * w;
    return u;
  };

  for (int round = 0; round < N; ++round) {
    // orthonormal frame of the complement of the accumulated normals
    SVec<N> tau = project_out(time_axis<N>());
    tau = (1.0 / std::sqrt(-minkowski_inner(tau, tau))) * tau;
    SVec<N> sigma;
    bool found = false;
    for (int k = 0; k < N && !found; ++k) {
      SVec<N> e;
      e.x[k] = 1.0;
      SVec<N> s = project_out(e);
      s = s + minkowski_inner(s, tau) * tau;
      if (minkowski_inner(s, s) > 1e-10) {
        sigma = (1.0 / std::sqrt(minkowski_inner(s, s))) * s;
        found = true;
      }
    }
    if (!found) throw std::runtime_error("z2n_symmetrize: frame construction failed");

    auto ep = equal_perimeter_plane(res.profile, tau, sigma);
    res.profile = symmetrize_profile(res.profile, ep.plane, SymmetrizeSign::plus);
    normals.push_back(ep.normal);
  }

  SVec<N> axis = time_axis<N>();
  for (const auto& w : normals) axis = axis - minkowski_inner(axis, w) * w;
  res.axis = (1.0 / std::sqrt(-minkowski_inner(axis, axis))) * axis;
  res.normals = std::move(normals);
  return res;
}

template double conformal_factor(const SVec<2>&, const Vec<2>&);
template double conformal_factor(const SVec<3>&, const Vec<3>&);
template Vec<2> conformal_image(const SVec<2>&, const Vec<2>&);
template Vec<3> conformal_image(const SVec<3>&, const Vec<3>&);
template class ConformalReflection<2>;
template class ConformalReflection<3>;
template ConeProfile<2> reflect_profile(const ConeProfile<2>&, const ConformalReflection<2>&);
template ConeProfile<3> reflect_profile(const ConeProfile<3>&, const ConformalReflection<3>&);
template ConeProfile<2> polarize_profile(const ConeProfile<2>&, const ConformalReflection<2>&);
template ConeProfile<3> polarize_profile(const ConeProfile<3>&, const ConformalReflection<3>&);
template ConeProfile<2> symmetrize_profile(const ConeProfile<2>&, const ReflectionPlane<2>&,
                                           SymmetrizeSign);
template ConeProfile<3> symmetrize_profile(const ConeProfile<3>&, const ReflectionPlane<3>&,
                                           SymmetrizeSign);
template EqualPerimeterPlane<2> equal_perimeter_plane(const ConeProfile<2>&, const SVec<2>&,
                                                      const SVec<2>&, const SVec<2>&);
template EqualPerimeterPlane<3> equal_perimeter_plane(const ConeProfile<3>&, const SVec<3>&,
                                                      const SVec<3>&, const SVec<3>&);
template Z2nResult<2> z2n_symmetrize(const ConeProfile<2>&);
template Z2nResult<3> z2n_symmetrize(const ConeProfile<3>&);

}  // namespace lcone
