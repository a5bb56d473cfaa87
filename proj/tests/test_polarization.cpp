#include <doctest.h>

#include <random>

#include "lcone/arrival.hpp"
#include "lcone/conformal.hpp"
#include "lcone/random_fields.hpp"

using namespace lcone;

TEST_CASE("conformal reflection identities at every node") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto grid = circle_grid(256);
    auto plane = random_plane<2>(rng);
    ConformalReflection<2> cr(plane, grid);
    for (int i = 0; i < grid->size(); ++i) {
      CHECK(cr.lambda(i) > 0.0);
      CHECK(std::abs(norm(cr.image(i)) - 1.0) < 1e-12);
      // involution of Gamma
      Vec<2> back = conformal_image(plane.normal(), cr.image(i));
      CHECK(norm(back - grid->node(i)) < 1e-10);
      // reciprocal conformal factors
      CHECK(cr.lambda(i) * cr.lambda_at_image(i) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  // n = 3 spot check
  auto grid3 = icosphere_grid(2);
  auto plane3 = random_plane<3>(rng);
  ConformalReflection<3> cr3(plane3, grid3);
  for (int i = 0; i < grid3->size(); ++i) {
    CHECK(cr3.lambda(i) * cr3.lambda_at_image(i) == doctest::Approx(1.0).epsilon(1e-10));
    Vec<3> back = conformal_image(plane3.normal(), cr3.image(i));
    CHECK(norm(back - grid3->node(i)) < 1e-10);
  }
}

TEST_CASE("conformal map agrees with the spacetime reflection of cone rays") {
  std::mt19937_64 rng(29);
  auto plane = random_plane<2>(rng);
  std::uniform_real_distribution<double> uth(0.0, 2.0 * kPi), uf(0.5, 2.0);
  for (int i = 0; i < 1000; ++i) {
    double th = uth(rng), fv = uf(rng);
    Vec<2> dir{std::cos(th), std::sin(th)};
    SVec<2> cone_pt{fv, fv * dir};
    SVec<2> img = reflect(cone_pt, plane);
    double lam = conformal_factor(plane.normal(), dir);
    Vec<2> gdir = conformal_image(plane.normal(), dir);
    CHECK(img.t == doctest::Approx(lam * fv).epsilon(1e-11));
    CHECK(norm(img.x - (lam * fv) * gdir) < 1e-10 * (1.0 + lam * fv));
  }
}

TEST_CASE("reflect_profile is an involution and maps caps to caps") {
  std::mt19937_64 rng(31);
  auto grid = circle_grid(1024);
  auto plane = random_plane<2>(rng, 0.8);
  ConformalReflection<2> cr(plane, grid);

  auto p = random_profile<2>(grid, rng);
  auto twice = reflect_profile(reflect_profile(p, cr), cr);
  for (int i = 0; i < grid->size(); ++i)
    CHECK(twice.values[i] == doctest::Approx(p.values[i]).epsilon(1e-6));

  // reflected cap is the cap of the reflected axis
  auto cap = cap_profile(time_axis<2>(), 1.0, grid);
  auto refl = reflect_profile(cap, cr);
  auto expected = cap_profile(reflect(time_axis<2>(), plane), 1.0, grid);
  for (int i = 0; i < grid->size(); ++i)
    CHECK(refl.values[i] == doctest::Approx(expected.values[i]).epsilon(1e-6));
}

TEST_CASE("reflection and polarisation preserve the perimeter") {
  std::mt19937_64 rng(37);
  auto grid = circle_grid(1024);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_profile<2>(grid, rng);
    auto plane = random_plane<2>(rng);
    ConformalReflection<2> cr(plane, grid);
    double p0 = perimeter(p);
    CHECK(perimeter(reflect_profile(p, cr)) == doctest::Approx(p0).epsilon(1e-4));
    CHECK(perimeter(polarize_profile(p, cr)) == doctest::Approx(p0).epsilon(1e-4));
  }
  // n = 3: icosphere interpolation is first order, tolerance wider
  auto grid3 = icosphere_grid(3);
  for (int trial = 0; trial < 5; ++trial) {
    auto p3 = random_profile<3>(grid3, rng);
    auto plane3 = random_plane<3>(rng, 0.8);
    ConformalReflection<3> cr3(plane3, grid3);
    CHECK(perimeter(polarize_profile(p3, cr3)) ==
          doctest::Approx(perimeter(p3)).epsilon(2e-3));
  }
}

TEST_CASE("polarisation fixes the centred cap and is idempotent") {
  std::mt19937_64 rng(41);
  auto grid = circle_grid(512);
  auto cap = cap_profile(time_axis<2>(), 1.3, grid);
  for (int trial = 0; trial < 10; ++trial) {
    auto plane = random_plane<2>(rng);
    ConformalReflection<2> cr(plane, grid);
    auto pol = polarize_profile(cap, cr);
    for (int i = 0; i < grid->size(); ++i)
      CHECK(pol.values[i] == doctest::Approx(cap.values[i]).epsilon(1e-9));

    auto p = random_profile<2>(grid, rng);
    auto once = polarize_profile(p, cr);
    auto twice = polarize_profile(once, cr);
    for (int i = 0; i < grid->size(); ++i)
      CHECK(twice.values[i] == doctest::Approx(once.values[i]).epsilon(1e-9));
  }
}

TEST_CASE("polarisation never loses domain-of-dependence volume") {
  std::mt19937_64 rng(43);
  auto grid = circle_grid(512);
  VolumeOptions<2> opts;
  opts.radial_nodes = 256;
  opts.dir_grid = circle_grid(256);
  const double eps_grid = 2e-4;  // from the f == 1 study at this resolution
  for (int trial = 0; trial < 25; ++trial) {
    auto p = random_profile<2>(grid, rng);
    auto plane = random_plane<2>(rng);
    ConformalReflection<2> cr(plane, grid);
    auto pol = polarize_profile(p, cr);
    CHECK(dod_volume(pol, opts) >= dod_volume(p, opts) - eps_grid);
  }
}

TEST_CASE("level sets commute with polarisation") {
  std::mt19937_64 rng(47);
  auto grid = circle_grid(512);
  auto p = random_profile<2>(grid, rng);
  auto plane = random_plane<2>(rng);
  ConformalReflection<2> cr(plane, grid);
  auto g = reflect_profile(p, cr);
  auto pol = polarize_profile(p, cr);
  std::uniform_real_distribution<double> ut(0.7, 1.3);
  for (int k = 0; k < 10; ++k) {
    double t = ut(rng);
    for (int i = 0; i < grid->size(); ++i) {
      bool ind_f = p.values[i] > t, ind_g = g.values[i] > t;
      bool ind_pol;
      switch (cr.ray_side(i)) {
        case Side::plus:
          ind_pol = ind_f || ind_g;
          break;
        case Side::minus:
          ind_pol = ind_f && ind_g;
          break;
        default:
          ind_pol = ind_f;
      }
      CHECK((pol.values[i] > t) == ind_pol);
    }
  }
}

TEST_CASE("symmetrisation: fixed points, symmetry, perimeter split") {
  std::mt19937_64 rng(53);
  auto grid = circle_grid(1024);

  // a centred cap is symmetric about any plane through its axis
  auto cap = cap_profile(time_axis<2>(), 1.0, grid);
  auto plane = random_plane<2>(rng);
  auto sym = symmetrize_profile(cap, plane, SymmetrizeSign::plus);
  for (int i = 0; i < grid->size(); ++i)
    CHECK(sym.values[i] == doctest::Approx(cap.values[i]).epsilon(1e-9));

  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_profile<2>(grid, rng);
    auto pl = random_plane<2>(rng, 0.7);
    auto s = symmetrize_profile(p, pl, SymmetrizeSign::plus);
    // invariant under reflection about the same plane
    ConformalReflection<2> cr(pl, grid);
    auto refl = reflect_profile(s, cr);
    for (int i = 0; i < grid->size(); ++i)
      CHECK(refl.values[i] == doctest::Approx(s.values[i]).epsilon(2e-4));
    // perimeter equals twice the plus-side half integral
    std::vector<double> q(p.values);
    auto sp = grid->half_split(q, pl.normal());
    CHECK(perimeter(s) == doctest::Approx(2.0 * sp.plus).epsilon(1e-3));
  }
}

TEST_CASE("equal perimeter separation plane") {
  auto grid = circle_grid(1024);
  ConeProfile<2> unit(grid, std::vector<double>(grid->size(), 1.0));
  SVec<2> e1{0.0, {1.0, 0.0}};

  // flat profile: the solved normal is purely spatial, inadmissible for v = e0
  auto ep = equal_perimeter_plane(unit, time_axis<2>(), e1);
  CHECK(std::abs(ep.normal.t) < 1e-8);
  CHECK_FALSE(ep.polarization_admissible);
  CHECK(ep.split_plus == doctest::Approx(ep.split_minus).epsilon(1e-9));

  // asymmetric profile: both halves agree to the bisection tolerance
  std::vector<double> f(grid->size());
  for (int i = 0; i < grid->size(); ++i) f[i] = 1.0 + 0.5 * std::cos(grid->angle(i));
  ConeProfile<2> lop(grid, f);
  auto ep2 = equal_perimeter_plane(lop, time_axis<2>(), e1);
  double total = ep2.split_plus + ep2.split_minus;
  CHECK(std::abs(ep2.split_plus - total / 2) <= 1e-9 * total);
  CHECK(total == doctest::Approx(perimeter(lop)).epsilon(1e-9));

  // uniqueness: a rebuilt frame finds the same plane
  auto ep3 = equal_perimeter_plane(lop, 2.0 * time_axis<2>(), e1 + 0.3 * time_axis<2>());
  CHECK(euclid_norm(ep3.normal - ep2.normal) < 1e-7);

  // non-timelike family rejected
  SVec<2> e2{0.0, {0.0, 1.0}};
  CHECK_THROWS(equal_perimeter_plane(unit, e1, e2));
}

TEST_CASE("z2n symmetrisation") {
  auto grid = circle_grid(1024);
  std::mt19937_64 rng(59);

  // a boosted cap is already (Z2)^n symmetric about its axis
  double beta = 0.3;
  SVec<2> v{std::cosh(beta), {std::sinh(beta), 0.0}};
  auto cap = cap_profile(v, 1.0, grid);
  auto res = z2n_symmetrize(cap);
  for (int i = 0; i < grid->size(); ++i)
    CHECK(res.profile.values[i] == doctest::Approx(cap.values[i]).epsilon(5e-4));
  double align = minkowski_inner(res.axis, v) / std::sqrt(-minkowski_inner(v, v));
  CHECK(align == doctest::Approx(-1.0).epsilon(1e-6));  // unit timelike alignment

  for (int trial = 0; trial < 5; ++trial) {
    auto p = random_profile<2>(grid, rng);
    auto r = z2n_symmetrize(p);
    CHECK(r.normals.size() == 2);
    // perimeter preserved across the construction
    CHECK(perimeter(r.profile) == doctest::Approx(perimeter(p)).epsilon(1e-3));
    // mutually orthogonal normals, axis orthogonal to both
    CHECK(std::abs(minkowski_inner(r.normals[0], r.normals[1])) < 1e-8);
    for (const auto& w : r.normals) CHECK(std::abs(minkowski_inner(r.axis, w)) < 1e-8);
    // invariant under reflection about each returned plane (the axis itself
    // lies in every plane, so nudge the polariser off it)
    for (const auto& w : r.normals) {
      ReflectionPlane<2> pl(w, r.axis + 0.05 * w);
      ConformalReflection<2> cr(pl, grid);
      auto refl = reflect_profile(r.profile, cr);
      for (int i = 0; i < grid->size(); ++i)
        CHECK(refl.values[i] == doctest::Approx(r.profile.values[i]).epsilon(2e-3));
    }
  }
}
