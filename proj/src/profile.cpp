#include "lcone/profile.hpp"

#include <algorithm>
#include <cmath>

namespace lcone {

template <int N>
ConeProfile<N>::ConeProfile(std::shared_ptr<const SphereGrid<N>> g, std::vector<double> v,
                            bool closed_cone)
    : grid(std::move(g)), values(std::move(v)), closed(closed_cone) {
  if (!grid) throw std::invalid_argument("ConeProfile: null grid");
  if (static_cast<int>(values.size()) != grid->size())
    throw std::invalid_argument("ConeProfile: value count does not match grid");
  for (double f : values)
    if (!(f > 0.0) || !std::isfinite(f))
      throw std::invalid_argument("ConeProfile: values must be positive and finite");
}

template <int N>
double ConeProfile<N>::max_value() const {
  return *std::max_element(values.begin(), values.end());
}

template <int N>
double ConeProfile<N>::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

SectorProfile::SectorProfile(std::vector<double> bounds_, std::vector<double> values_,
                             std::vector<double> boundary_values_, bool closed_cone)
    : bounds(std::move(bounds_)),
      sector_values(std::move(values_)),
      boundary_values(std::move(boundary_values_)),
      closed(closed_cone) {
  if (bounds.empty() || bounds.size() != sector_values.size() ||
      bounds.size() != boundary_values.size())
    throw std::invalid_argument("SectorProfile: inconsistent sizes");
  for (size_t k = 0; k < bounds.size(); ++k) {
    if (bounds[k] < 0.0 || bounds[k] >= 2.0 * kPi)
      throw std::invalid_argument("SectorProfile: boundary angle out of [0, 2pi)");
    if (k > 0 && !(bounds[k] > bounds[k - 1]))
      throw std::invalid_argument("SectorProfile: boundaries must be strictly increasing");
    if (!(sector_values[k] > 0.0) || !(boundary_values[k] > 0.0))
      throw std::invalid_argument("SectorProfile: values must be positive");
  }
}

double SectorProfile::max_value() const {
  double m = 0.0;
  for (double v : sector_values) m = std::max(m, v);
  for (double v : boundary_values) m = std::max(m, v);
  return m;
}

double SectorProfile::min_value() const {
  double m = sector_values[0];
  for (double v : sector_values) m = std::min(m, v);
  for (double v : boundary_values) m = std::min(m, v);
  return m;
}

template <int N>
double perimeter(const ConeProfile<N>& p) {
  std::vector<double> q(p.values.size());
  for (size_t i = 0; i < q.size(); ++i)
    q[i] = N == 2 ? p.values[i] : p.values[i] * p.values[i];
  return p.grid->integrate(q);
}

double perimeter(const SectorProfile& p) {
  // exact: boundary points have measure zero
  double s = 0.0;
  int m = p.sectors();
  for (int k = 0; k < m; ++k) {
    double th0 = p.bounds[k];
    double th1 = (k + 1 < m) ? p.bounds[k + 1] : p.bounds[0] + 2.0 * kPi;
    s += p.sector_values[k] * (th1 - th0);
  }
  return s;
}

namespace {

template <int N, typename Op>
ConeProfile<N> stencil_envelope(const ConeProfile<N>& p, Op op) {
  ConeProfile<N> out = p;
  for (int i = 0; i < p.grid->size(); ++i) {
    double v = p.values[i];
    for (int j : p.grid->neighbors(i)) v = op(v, p.values[j]);
    out.values[i] = v;
  }
  return out;
}

}  // namespace

template <int N>
ConeProfile<N> upper_envelope(const ConeProfile<N>& p) {
  auto out = stencil_envelope(p, [](double a, double b) { return std::max(a, b); });
  out.closed = true;
  return out;
}

template <int N>
ConeProfile<N> lower_envelope(const ConeProfile<N>& p) {
  auto out = stencil_envelope(p, [](double a, double b) { return std::min(a, b); });
  out.closed = false;
  return out;
}

SectorProfile upper_envelope(const SectorProfile& p) {
  SectorProfile out = p;
  int m = p.sectors();
  for (int k = 0; k < m; ++k) {
    double left = p.sector_values[(k + m - 1) % m];
    out.boundary_values[k] = std::max({left, p.sector_values[k], p.boundary_values[k]});
  }
  out.closed = true;
  return out;
}

SectorProfile lower_envelope(const SectorProfile& p) {
  SectorProfile out = p;
  int m = p.sectors();
  for (int k = 0; k < m; ++k) {
    double left = p.sector_values[(k + m - 1) % m];
    out.boundary_values[k] = std::min({left, p.sector_values[k], p.boundary_values[k]});
  }
  out.closed = false;
  return out;
}

namespace {

template <int N>
bool values_equal(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace

template <int N>
bool is_plump(const ConeProfile<N>& p, double tol) {
  if (p.closed) {
    auto r = upper_envelope(lower_envelope(p));
    return values_equal<N>(r.values, p.values, tol);
  }
  auto r = lower_envelope(upper_envelope(p));
  return values_equal<N>(r.values, p.values, tol);
}

bool is_plump(const SectorProfile& p, double tol) {
  int m = p.sectors();
  for (int k = 0; k < m; ++k) {
    double left = p.sector_values[(k + m - 1) % m];
    double want = p.closed ? std::max(left, p.sector_values[k])
                           : std::min(left, p.sector_values[k]);
    if (std::abs(p.boundary_values[k] - want) > tol) return false;
  }
  return true;
}

template <int N>
ConeProfile<N> cap_profile(const SVec<N>& v, double l, std::shared_ptr<const SphereGrid<N>> grid) {
  if (!(l > 0.0)) throw std::invalid_argument("cap_profile: l must be positive");
  auto c = causal_class(v);
  if (c.kind != CausalKind::timelike || c.orientation != TimeOrientation::future)
    throw std::invalid_argument("cap_profile: v must be future timelike");
  double vnorm = std::sqrt(-minkowski_inner(v, v));
  std::vector<double> f(grid->size());
  for (int i = 0; i < grid->size(); ++i) f[i] = l * vnorm / (v.t - dot(v.x, grid->node(i)));
  return ConeProfile<N>(std::move(grid), std::move(f));
}

double cap_volume_oracle(int n, double l) {
  if (!(l > 0.0)) throw std::invalid_argument("cap_volume_oracle: l must be positive");
  return 2.0 * unit_ball_volume(n) * std::pow(l, n + 1) / (n + 1);
}

template <int N>
ConeProfile<N> scaled(const ConeProfile<N>& p, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
  ConeProfile<N> out = p;
  for (double& v : out.values) v *= c;
  return out;
}

ConeProfile<2> sampled_from_sectors(const SectorProfile& p,
                                    std::shared_ptr<const SphereGrid<2>> grid) {
  int m = p.sectors();
  std::vector<double> f(grid->size());
  for (int i = 0; i < grid->size(); ++i) {
    double th = grid->angle(i);
    // sector containing th, with exact boundary-angle handling
    int k = static_cast<int>(std::upper_bound(p.bounds.begin(), p.bounds.end(), th) -
                             p.bounds.begin()) - 1;
    if (k < 0) k = m - 1;  // th below the first boundary wraps to the last sector
    int kb = (k + 1) % m;
    if (std::abs(th - p.bounds[k]) < 1e-14)
      f[i] = p.boundary_values[k];
    else if (kb != 0 && std::abs(th - p.bounds[kb]) < 1e-14)
      f[i] = p.boundary_values[kb];
    else
      f[i] = p.sector_values[k];
  }
  return ConeProfile<2>(std::move(grid), std::move(f), p.closed);
}

template <int N>
double euclidean_lateral_area(const ConeProfile<N>& p) {
  const auto& g = *p.grid;
  if constexpr (N == 2) {
    int m = g.size();
    double len = 0.0;
    for (int i = 0; i < m; ++i) {
      int j = (i + 1) % m;
      double fi = p.values[i], fj = p.values[j];
      Vec<2> a = fi * g.node(i), b = fj * g.node(j);
      double dt = fj - fi;
      len += std::sqrt(dt * dt + dot(b - a, b - a));
    }
    return std::sqrt(2.0) * len;
  } else {
    double area = 0.0;
    for (int k = 0; k < g.triangle_count(); ++k) {
      auto& t = g.triangle(k);
      // triangle of the graph surface in R^4
      double ft[3];
      Vec<3> fx[3];
      for (int j = 0; j < 3; ++j) {
        ft[j] = p.values[t[j]];
        fx[j] = p.values[t[j]] * g.node(t[j]);
      }
      double ut = ft[1] - ft[0], vt = ft[2] - ft[0];
      Vec<3> ux = fx[1] - fx[0], vx = fx[2] - fx[0];
      double uu = ut * ut + dot(ux, ux);
      double vv = vt * vt + dot(vx, vx);
      double uv = ut * vt + dot(ux, vx);
      area += 0.5 * std::sqrt(std::max(0.0, uu * vv - uv * uv));
    }
    return std::sqrt(2.0) * area;
  }
}

double euclidean_lateral_area(const SectorProfile&) {
  throw std::invalid_argument("euclidean_lateral_area: piecewise-sector profiles rejected");
}

template struct ConeProfile<2>;
template struct ConeProfile<3>;
template double perimeter(const ConeProfile<2>&);
template double perimeter(const ConeProfile<3>&);
template ConeProfile<2> upper_envelope(const ConeProfile<2>&);
template ConeProfile<3> upper_envelope(const ConeProfile<3>&);
template ConeProfile<2> lower_envelope(const ConeProfile<2>&);
template ConeProfile<3> lower_envelope(const ConeProfile<3>&);
template bool is_plump(const ConeProfile<2>&, double);
template bool is_plump(const ConeProfile<3>&, double);
template ConeProfile<2> cap_profile(const SVec<2>&, double, std::shared_ptr<const SphereGrid<2>>);
template ConeProfile<3> cap_profile(const SVec<3>&, double, std::shared_ptr<const SphereGrid<3>>);
template ConeProfile<2> scaled(const ConeProfile<2>&, double);
template ConeProfile<3> scaled(const ConeProfile<3>&, double);
template double euclidean_lateral_area(const ConeProfile<2>&);
template double euclidean_lateral_area(const ConeProfile<3>&);

}  // namespace lcone
