#include "lcone/indicator.hpp"

#include <cmath>

#include "lcone/parallel.hpp"

namespace lcone {

template <int N>
IndicatorRegion<N>::IndicatorRegion(double t0, double t1, const Vec<N>& xlo, const Vec<N>& xhi,
                                    int cells_t, const std::array<int, N>& cells_x)
    : t_lo(t0), t_hi(t1), x_lo(xlo), x_hi(xhi), nt(cells_t), nx(cells_x) {
  if (!(t1 > t0) || cells_t < 1) throw std::invalid_argument("IndicatorRegion: bad t extent");
  for (int k = 0; k < N; ++k)
    if (!(xhi[k] > xlo[k]) || cells_x[k] < 1)
      throw std::invalid_argument("IndicatorRegion: bad spatial extent");
  occ.assign(cell_count(), 0);
}

template <int N>
std::int64_t IndicatorRegion<N>::cell_count() const {
  std::int64_t c = nt;
  for (int k = 0; k < N; ++k) c *= nx[k];
  return c;
}

template <int N>
double IndicatorRegion<N>::cell_volume() const {
  double v = (t_hi - t_lo) / nt;
  for (int k = 0; k < N; ++k) v *= (x_hi[k] - x_lo[k]) / nx[k];
  return v;
}

template <int N>
std::int64_t IndicatorRegion<N>::occupied_cells() const {
  std::int64_t c = 0;
  for (auto b : occ) c += b;
  return c;
}

template <int N>
std::int64_t IndicatorRegion<N>::index(int it, const std::array<int, N>& ix) const {
  std::int64_t id = it;
  for (int k = 0; k < N; ++k) id = id * nx[k] + ix[k];
  return id;
}

template <int N>
SVec<N> IndicatorRegion<N>::center(int it, const std::array<int, N>& ix) const {
  SVec<N> p;
  p.t = t_lo + (it + 0.5) * (t_hi - t_lo) / nt;
  for (int k = 0; k < N; ++k) p.x[k] = x_lo[k] + (ix[k] + 0.5) * (x_hi[k] - x_lo[k]) / nx[k];
  return p;
}

template <int N>
bool IndicatorRegion<N>::inside_box(const SVec<N>& p) const {
  if (p.t < t_lo || p.t > t_hi) return false;
  for (int k = 0; k < N; ++k)
    if (p.x[k] < x_lo[k] || p.x[k] > x_hi[k]) return false;
  return true;
}

template <int N>
bool IndicatorRegion<N>::at(const SVec<N>& p) const {
  int it = static_cast<int>(std::floor((p.t - t_lo) / (t_hi - t_lo) * nt));
  if (it < 0 || it >= nt) return false;
  std::array<int, N> ix{};
  for (int k = 0; k < N; ++k) {
    ix[k] = static_cast<int>(std::floor((p.x[k] - x_lo[k]) / (x_hi[k] - x_lo[k]) * nx[k]));
    if (ix[k] < 0 || ix[k] >= nx[k]) return false;
  }
  return occ[index(it, ix)] != 0;
}

namespace {

template <int N, typename Fn>
void for_each_cell(const IndicatorRegion<N>& s, Fn&& fn) {
  std::array<int, N> ix{};
  for (int it = 0; it < s.nt; ++it) {
    ix.fill(0);
    while (true) {
      fn(it, ix);
      int k = N - 1;
      while (k >= 0 && ++ix[k] == s.nx[k]) ix[k--] = 0;
      if (k < 0) break;
    }
  }
}

}  // namespace

template <int N>
IndicatorRegion<N> polarize_indicator(const IndicatorRegion<N>& s,
                                      const ReflectionPlane<N>& plane) {
  // reflections of the occupied set must stay representable
  for_each_cell(s, [&](int it, const std::array<int, N>& ix) {
    if (!s.occ[s.index(it, ix)]) return;
    if (!s.inside_box(reflect(s.center(it, ix), plane)))
      throw std::runtime_error("polarize_indicator: reflected cell centre outside box");
  });

  IndicatorRegion<N> out = s;
  for_each_cell(s, [&](int it, const std::array<int, N>& ix) {
    SVec<N> c = s.center(it, ix);
    bool self = s.occ[s.index(it, ix)] != 0;
    bool mirror = s.at(reflect(c, plane));
    switch (side_of(c, plane)) {
      case Side::plus:
        out.occ[s.index(it, ix)] = (self || mirror) ? 1 : 0;
        break;
      case Side::minus:
        out.occ[s.index(it, ix)] = (self && mirror) ? 1 : 0;
        break;
      case Side::on:
        break;  // keep
    }
  });
  return out;
}

template <int N>
double symdiff_volume(const IndicatorRegion<N>& a, const IndicatorRegion<N>& b) {
  if (a.nt != b.nt || a.nx != b.nx) throw std::invalid_argument("symdiff_volume: grid mismatch");
  std::int64_t c = 0;
  for (size_t i = 0; i < a.occ.size(); ++i) c += (a.occ[i] != b.occ[i]);
  return c * a.cell_volume();
}

template <int N>
double boundary_layer_volume(const IndicatorRegion<N>& s) {
  std::int64_t c = 0;
  for_each_cell(s, [&](int it, const std::array<int, N>& ix) {
    bool self = s.occ[s.index(it, ix)] != 0;
    bool iface = false;
    for (int axis = 0; axis <= N && !iface; ++axis) {
      for (int d = -1; d <= 1 && !iface; d += 2) {
        int jt = it + (axis == 0 ? d : 0);
        auto jx = ix;
        if (axis > 0) jx[axis - 1] += d;
        bool nb = false;
        if (jt >= 0 && jt < s.nt) {
          bool ok = true;
          for (int k = 0; k < N; ++k) ok = ok && jx[k] >= 0 && jx[k] < s.nx[k];
          if (ok) nb = s.occ[s.index(jt, jx)] != 0;
        }
        if (nb != self) iface = true;
      }
    }
    if (iface) ++c;
  });
  return c * s.cell_volume();
}

template <int N>
bool contained_up_to_layer(const IndicatorRegion<N>& a, const IndicatorRegion<N>& b, int layers) {
  if (a.nt != b.nt || a.nx != b.nx)
    throw std::invalid_argument("contained_up_to_layer: grid mismatch");
  bool ok = true;
  for_each_cell(a, [&](int it, const std::array<int, N>& ix) {
    if (!ok || !a.occ[a.index(it, ix)]) return;
    for (int jt = it - layers; jt <= it + layers; ++jt) {
      if (jt < 0 || jt >= b.nt) continue;
      std::array<int, N> lo{}, cur{};
      for (int k = 0; k < N; ++k) lo[k] = ix[k] - layers;
      cur = lo;
      while (true) {
        bool in = true;
        for (int k = 0; k < N; ++k) in = in && cur[k] >= 0 && cur[k] < b.nx[k];
        if (in && b.occ[b.index(jt, cur)]) return;
        int k = N - 1;
        while (k >= 0 && ++cur[k] > ix[k] + layers) cur[k--] = lo[k];
        if (k < 0) break;
      }
    }
    ok = false;
  });
  return ok;
}

template <int N>
IndicatorRegion<N> rasterize_dod(const ConeProfile<N>& p, const IndicatorRegion<N>& box_spec) {
  IndicatorRegion<N> out = box_spec;
  std::fill(out.occ.begin(), out.occ.end(), 0);
  // one arrival evaluation per spatial column
  std::int64_t columns = 1;
  for (int k = 0; k < N; ++k) columns *= out.nx[k];
#pragma omp parallel for schedule(static) if (par::enabled())
  for (std::int64_t col = 0; col < columns; ++col) {
    std::array<int, N> ix{};
    std::int64_t rest = col;
    for (int k = N - 1; k >= 0; --k) {
      ix[k] = static_cast<int>(rest % out.nx[k]);
      rest /= out.nx[k];
    }
    Vec<N> x;
    for (int k = 0; k < N; ++k) x[k] = out.x_lo[k] + (ix[k] + 0.5) * (out.x_hi[k] - out.x_lo[k]) / out.nx[k];
    double u = arrival(p, x);
    double r = norm(x);
    for (int it = 0; it < out.nt; ++it) {
      double t = out.t_lo + (it + 0.5) * (out.t_hi - out.t_lo) / out.nt;
      if (t >= r && t < u) out.occ[out.index(it, ix)] = 1;
    }
  }
  return out;
}

template struct IndicatorRegion<2>;
template struct IndicatorRegion<3>;
template IndicatorRegion<2> polarize_indicator(const IndicatorRegion<2>&,
                                               const ReflectionPlane<2>&);
template IndicatorRegion<3> polarize_indicator(const IndicatorRegion<3>&,
                                               const ReflectionPlane<3>&);
template double symdiff_volume(const IndicatorRegion<2>&, const IndicatorRegion<2>&);
template double symdiff_volume(const IndicatorRegion<3>&, const IndicatorRegion<3>&);
template double boundary_layer_volume(const IndicatorRegion<2>&);
template double boundary_layer_volume(const IndicatorRegion<3>&);
template bool contained_up_to_layer(const IndicatorRegion<2>&, const IndicatorRegion<2>&, int);
template bool contained_up_to_layer(const IndicatorRegion<3>&, const IndicatorRegion<3>&, int);
template IndicatorRegion<2> rasterize_dod(const ConeProfile<2>&, const IndicatorRegion<2>&);
template IndicatorRegion<3> rasterize_dod(const ConeProfile<3>&, const IndicatorRegion<3>&);

}  // namespace lcone
