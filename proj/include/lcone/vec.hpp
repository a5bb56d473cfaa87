#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lcone {

inline constexpr double kPi = 3.14159265358979323846;

/// Volume of the unit n-ball (n = 2 or 3).
inline double unit_ball_volume(int n) {
  if (n == 2) return kPi;
  if (n == 3) return 4.0 * kPi / 3.0;
  throw std::invalid_argument("unit_ball_volume: n must be 2 or 3");
}

/// Area of the unit sphere S^{n-1}, i.e. n * omega_n.
inline double unit_sphere_area(int n) { return n * unit_ball_volume(n); }

template <int N>
struct Vec {
  std::array<double, N> c{};

  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < N; ++i) c[i] += o.c[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < N; ++i) c[i] -= o.c[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < N; ++i) c[i] *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }
};

template <int N>
inline double dot(const Vec<N>& a, const Vec<N>& b) {
  double s = 0.0;
  for (int i = 0; i < N; ++i) s += a.c[i] * b.c[i];
  return s;
}

template <int N>
inline double norm(const Vec<N>& a) {
  return std::sqrt(dot(a, a));
}

template <int N>
inline Vec<N> normalized(const Vec<N>& a) {
  double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
  return (1.0 / n) * a;
}

inline Vec<3> cross(const Vec<3>& a, const Vec<3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

/// Point or vector in (n+1)-dimensional Minkowski spacetime, signature (-,+..+).
template <int N>
struct SVec {
  double t = 0.0;
  Vec<N> x{};

  SVec() = default;
  SVec(double t_, Vec<N> x_) : t(t_), x(x_) {
    if (!std::isfinite(t)) throw std::invalid_argument("SVec: non-finite time component");
    for (int i = 0; i < N; ++i)
      if (!std::isfinite(x[i])) throw std::invalid_argument("SVec: non-finite spatial component");
  }

  SVec& operator+=(const SVec& o) {
    t += o.t;
    x += o.x;
    return *this;
  }
  SVec& operator-=(const SVec& o) {
    t -= o.t;
    x -= o.x;
    return *this;
  }
  SVec& operator*=(double s) {
    t *= s;
    x *= s;
    return *this;
  }
  friend SVec operator+(SVec a, const SVec& b) { return a += b; }
  friend SVec operator-(SVec a, const SVec& b) { return a -= b; }
  friend SVec operator*(double s, SVec a) { return a *= s; }
  friend SVec operator-(SVec a) { return a *= -1.0; }
};

template <int N>
inline double minkowski_inner(const SVec<N>& a, const SVec<N>& b) {
  return -a.t * b.t + dot(a.x, b.x);
}

/// Euclidean magnitude, used only for tolerance scaling.
template <int N>
inline double euclid_norm(const SVec<N>& a) {
  return std::sqrt(a.t * a.t + dot(a.x, a.x));
}

enum class CausalKind { timelike, null, spacelike };
enum class TimeOrientation { future, past, none };

struct CausalClass {
  CausalKind kind;
  TimeOrientation orientation;
};

/// Classify a nonzero vector by the sign of eta(a,a), with a relative
/// tolerance band |eta(a,a)| <= eps_null * |a|^2 treated as null.
template <int N>
inline CausalClass causal_class(const SVec<N>& a, double eps_null = 1e-10) {
  double e2 = a.t * a.t + dot(a.x, a.x);
  if (e2 == 0.0) throw std::invalid_argument("causal_class: zero vector");
  double q = minkowski_inner(a, a);
  CausalClass c{};
  if (std::abs(q) <= eps_null * e2)
    c.kind = CausalKind::null;
  else
    c.kind = q < 0.0 ? CausalKind::timelike : CausalKind::spacelike;
  if (c.kind == CausalKind::spacelike)
    c.orientation = TimeOrientation::none;
  else
    c.orientation = a.t > 0.0 ? TimeOrientation::future
                              : (a.t < 0.0 ? TimeOrientation::past : TimeOrientation::none);
  return c;
}

/// Timelike hyperplane through the origin with unit spacelike normal w,
/// together with a future timelike polariser direction v not in the plane.
template <int N>
class ReflectionPlane {
 public:
  ReflectionPlane(const SVec<N>& w, const SVec<N>& v) : v_(v) {
    double ww = minkowski_inner(w, w);
    if (!(ww > 0.0)) throw std::invalid_argument("ReflectionPlane: normal must be spacelike");
    w_ = (1.0 / std::sqrt(ww)) * w;
    if (!(minkowski_inner(v, v) < 0.0) || !(v.t > 0.0))
      throw std::invalid_argument("ReflectionPlane: polariser must be future timelike");
    eta_vw_ = minkowski_inner(v_, w_);
    if (std::abs(eta_vw_) < 1e-9)
      throw std::invalid_argument("ReflectionPlane: polariser lies in the plane");
  }

  const SVec<N>& normal() const { return w_; }
  const SVec<N>& polariser() const { return v_; }
  double eta_vw() const { return eta_vw_; }

 private:
  SVec<N> w_;
  SVec<N> v_;
  double eta_vw_;
};

/// Lorentz reflection about the plane: p - 2 eta(p,w) w.
template <int N>
inline SVec<N> reflect(const SVec<N>& p, const ReflectionPlane<N>& plane) {
  double a = minkowski_inner(p, plane.normal());
  return p - (2.0 * a) * plane.normal();
}

enum class Side { plus, minus, on };

/// Which open half-spacetime a point is in; H+ contains the polariser v.
template <int N>
inline Side side_of(const SVec<N>& p, const ReflectionPlane<N>& plane, double eps_on = 1e-12) {
  double q = minkowski_inner(p, plane.normal()) * plane.eta_vw();
  double thr = eps_on * std::max(1.0, euclid_norm(p)) * std::abs(plane.eta_vw());
  if (q > thr) return Side::plus;
  if (q < -thr) return Side::minus;
  return Side::on;
}

template <int N>
inline SVec<N> time_axis() {
  SVec<N> e0;
  e0.t = 1.0;
  return e0;
}

}  // namespace lcone
