#include <doctest.h>

#include <random>

#include "lcone/sphere_grid.hpp"
#include "lcone/vec.hpp"

using namespace lcone;

namespace {

template <int N>
SVec<N> random_svec(std::mt19937_64& rng, double scale = 2.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  SVec<N> p;
  p.t = u(rng);
  for (int k = 0; k < N; ++k) p.x[k] = u(rng);
  return p;
}

template <int N>
ReflectionPlane<N> random_test_plane(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ua(-1.2, 1.2), uth(0.0, 2.0 * kPi), uz(-1.0, 1.0);
  while (true) {
    double alpha = ua(rng);
    Vec<N> dir;
    if constexpr (N == 2) {
      double th = uth(rng);
      dir = Vec<2>{std::cos(th), std::sin(th)};
    } else {
      double z = uz(rng), ph = uth(rng);
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      dir = Vec<3>{r * std::cos(ph), r * std::sin(ph), z};
    }
    SVec<N> w;
    w.t = std::sinh(alpha);
    w.x = std::cosh(alpha) * dir;
    if (std::abs(std::sinh(alpha)) < 1e-3) continue;
    return ReflectionPlane<N>(w, time_axis<N>());
  }
}

}  // namespace

TEST_CASE("minkowski inner product signature") {
  SVec<2> e0{1.0, {0.0, 0.0}};
  CHECK(minkowski_inner(e0, e0) == doctest::Approx(-1.0));
  SVec<2> null_v{1.0, {1.0, 0.0}};
  CHECK(minkowski_inner(null_v, null_v) == doctest::Approx(0.0));
  SVec<2> sp{0.0, {0.6, 0.8}};
  CHECK(minkowski_inner(sp, sp) == doctest::Approx(1.0));

  // bilinearity and symmetry on random vectors
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto a = random_svec<3>(rng), b = random_svec<3>(rng), c = random_svec<3>(rng);
    CHECK(minkowski_inner(a, b) == doctest::Approx(minkowski_inner(b, a)));
    CHECK(minkowski_inner(a + c, b) ==
          doctest::Approx(minkowski_inner(a, b) + minkowski_inner(c, b)));
  }
}

TEST_CASE("causal classification") {
  CHECK(causal_class(SVec<2>{2.0, {1.0, 0.0}}).kind == CausalKind::timelike);
  CHECK(causal_class(SVec<2>{2.0, {1.0, 0.0}}).orientation == TimeOrientation::future);
  CHECK(causal_class(SVec<2>{-1.0, {1.0, 0.0}}).kind == CausalKind::null);
  CHECK(causal_class(SVec<2>{-1.0, {1.0, 0.0}}).orientation == TimeOrientation::past);
  CHECK(causal_class(SVec<2>{0.0, {0.0, 1.0}}).kind == CausalKind::spacelike);
  CHECK(causal_class(SVec<2>{0.0, {0.0, 1.0}}).orientation == TimeOrientation::none);
  CHECK_THROWS(causal_class(SVec<2>{}));
}

TEST_CASE("reflection plane constructor invariants") {
  SVec<2> w{0.3, {1.1, 0.0}};
  ReflectionPlane<2> plane(w, time_axis<2>());
  CHECK(minkowski_inner(plane.normal(), plane.normal()) == doctest::Approx(1.0).epsilon(1e-12));
  // timelike normal rejected
  CHECK_THROWS(ReflectionPlane<2>(SVec<2>{2.0, {1.0, 0.0}}, time_axis<2>()));
  // past or spacelike polariser rejected
  CHECK_THROWS(ReflectionPlane<2>(w, SVec<2>{-1.0, {0.0, 0.0}}));
  CHECK_THROWS(ReflectionPlane<2>(w, SVec<2>{0.0, {1.0, 0.0}}));
  // polariser inside the plane rejected (purely spatial normal, v = e0)
  CHECK_THROWS(ReflectionPlane<2>(SVec<2>{0.0, {1.0, 0.0}}, time_axis<2>()));
}

TEST_CASE("reflect: normal negated, plane fixed, involution, isometry, null rays") {
  std::mt19937_64 rng(11);
  auto plane = random_test_plane<3>(rng);
  const auto& w = plane.normal();

  auto wr = reflect(w, plane);
  CHECK(euclid_norm(wr + w) < 1e-12);

  for (int i = 0; i < 50; ++i) {
    auto p = random_svec<3>(rng);
    // fixed points of the plane
    auto q = p - minkowski_inner(p, w) * w;
    CHECK(euclid_norm(reflect(q, plane) - q) < 1e-12 * (1.0 + euclid_norm(q)));
    // involution
    CHECK(euclid_norm(reflect(reflect(p, plane), plane) - p) <
          1e-12 * (1.0 + euclid_norm(p)));
    // eta-isometry
    auto b = random_svec<3>(rng);
    CHECK(minkowski_inner(reflect(p, plane), reflect(b, plane)) ==
          doctest::Approx(minkowski_inner(p, b)).epsilon(1e-11));
  }

  // the lightcone maps to itself
  for (int i = 0; i < 20; ++i) {
    std::uniform_real_distribution<double> uth(0.0, 2.0 * kPi), uz(-1.0, 1.0);
    double z = uz(rng), ph = uth(rng);
    double r = std::sqrt(1.0 - z * z);
    SVec<3> nullray{1.0, {r * std::cos(ph), r * std::sin(ph), z}};
    auto img = reflect(nullray, plane);
    CHECK(std::abs(minkowski_inner(img, img)) < 1e-12);
    CHECK(img.t > 0.0);  // orthochronous
  }
}

TEST_CASE("side_of basics") {
  std::mt19937_64 rng(3);
  auto plane = random_test_plane<2>(rng);
  CHECK(side_of(plane.polariser(), plane) == Side::plus);
  CHECK(side_of(SVec<2>{}, plane) == Side::on);
  for (int i = 0; i < 50; ++i) {
    auto p = random_svec<2>(rng);
    auto s = side_of(p, plane);
    if (s == Side::on) continue;
    auto sr = side_of(reflect(p, plane), plane);
    CHECK(((s == Side::plus && sr == Side::minus) || (s == Side::minus && sr == Side::plus)));
  }
}

TEST_CASE("circle grid quadrature") {
  auto g4 = circle_grid(4);
  for (int i = 0; i < 4; ++i) {
    CHECK(g4->angle(i) == doctest::Approx(kPi / 2 * i));
    CHECK(g4->weight(i) == doctest::Approx(kPi / 2));
  }
  auto g = circle_grid(1024);
  double wsum = 0.0, csum = 0.0;
  for (int i = 0; i < g->size(); ++i) {
    wsum += g->weight(i);
    csum += g->weight(i) * g->node(i)[0];
    CHECK(std::abs(norm(g->node(i)) - 1.0) < 1e-12);
  }
  CHECK(wsum == doctest::Approx(2.0 * kPi).epsilon(1e-13));
  CHECK(std::abs(csum) < 1e-12);
}

TEST_CASE("icosphere grid quadrature") {
  auto g = icosphere_grid(4);
  CHECK(g->size() == 2562);
  double wsum = 0.0;
  Vec<3> first_moment{};
  for (int i = 0; i < g->size(); ++i) {
    CHECK(std::abs(norm(g->node(i)) - 1.0) < 1e-12);
    CHECK(g->weight(i) > 0.0);
    wsum += g->weight(i);
    first_moment += g->weight(i) * g->node(i);
  }
  CHECK(std::abs(wsum - 4.0 * kPi) < 1e-9);
  CHECK(norm(first_moment) < 1e-9);

  // quadratic exactness check: integral of z^2 over the sphere is 4*pi/3
  double zz = 0.0;
  for (int i = 0; i < g->size(); ++i) zz += g->weight(i) * g->node(i)[2] * g->node(i)[2];
  CHECK(zz == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-4));
}

TEST_CASE("sphere_grid factory maps resolution to node count") {
  CHECK(sphere_grid<2>(256)->size() == 256);
  CHECK(sphere_grid<3>(2562)->size() == 2562);
  CHECK(sphere_grid<3>(2000)->size() == 2562);
  CHECK_THROWS(sphere_grid<3>(4));
}

TEST_CASE("half_split sums to the full integral and matches caps") {
  auto g = circle_grid(512);
  std::vector<double> q(g->size());
  for (int i = 0; i < g->size(); ++i) q[i] = 1.0 + 0.5 * std::cos(g->angle(i));
  double total = g->integrate(q);
  SVec<2> w{0.0, {0.0, 1.0}};  // split along the x-axis
  auto sp = g->half_split(q, w);
  CHECK(sp.plus + sp.minus == doctest::Approx(total).epsilon(1e-12));
  // the cos term integrates to zero over each half chosen symmetrically
  CHECK(sp.plus == doctest::Approx(total / 2).epsilon(1e-9));

  auto g3 = icosphere_grid(3);
  std::vector<double> q3(g3->size(), 1.0);
  SVec<3> w3{0.0, {0.0, 0.0, 1.0}};
  auto sp3 = g3->half_split(q3, w3);
  CHECK(sp3.plus == doctest::Approx(sp3.minus).epsilon(1e-9));
  CHECK(sp3.plus + sp3.minus == doctest::Approx(4.0 * kPi).epsilon(1e-3));
}

TEST_CASE("interpolation reproduces nodal and smooth data") {
  auto g = circle_grid(256);
  std::vector<double> q(g->size());
  for (int i = 0; i < g->size(); ++i) q[i] = 2.0 + std::sin(g->angle(i));
  for (int i = 0; i < g->size(); ++i)
    CHECK(g->interpolate(q, g->node(i)) == doctest::Approx(q[i]).epsilon(1e-12));
  Vec<2> dir{std::cos(0.1234), std::sin(0.1234)};
  CHECK(g->interpolate(q, dir) == doctest::Approx(2.0 + std::sin(0.1234)).epsilon(1e-4));

  auto g3 = icosphere_grid(3);
  std::vector<double> q3(g3->size());
  for (int i = 0; i < g3->size(); ++i) q3[i] = 1.0 + 0.3 * g3->node(i)[2];
  for (int i = 0; i < g3->size(); ++i)
    CHECK(g3->interpolate(q3, g3->node(i)) == doctest::Approx(q3[i]).epsilon(1e-12));
  Vec<3> d3 = normalized(Vec<3>{0.3, -0.2, 0.93});
  CHECK(g3->interpolate(q3, d3) == doctest::Approx(1.0 + 0.3 * d3[2]).epsilon(1e-3));
}
