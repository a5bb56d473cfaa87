#include <doctest.h>

#include <random>

#include "lcone/profile.hpp"
#include "lcone/random_fields.hpp"

using namespace lcone;

TEST_CASE("perimeter of constant and boosted profiles") {
  auto g = circle_grid(1024);
  ConeProfile<2> unit(g, std::vector<double>(g->size(), 1.0));
  CHECK(perimeter(unit) == doctest::Approx(2.0 * kPi).epsilon(1e-13));

  auto g3 = icosphere_grid(3);
  ConeProfile<3> unit3(g3, std::vector<double>(g3->size(), 1.0));
  CHECK(perimeter(unit3) == doctest::Approx(4.0 * kPi).epsilon(1e-9));

  // boosted cap: closed form integral of dtheta/(a - b cos) = 2 pi / sqrt(a^2-b^2)
  double beta = 0.5;
  SVec<2> v{std::cosh(beta), {std::sinh(beta), 0.0}};
  auto cap = cap_profile(v, 1.0, g);
  for (int i = 0; i < g->size(); ++i) {
    double expect = 1.0 / (std::cosh(beta) - std::sinh(beta) * std::cos(g->angle(i)));
    CHECK(cap.values[i] == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(perimeter(cap) == doctest::Approx(2.0 * kPi).epsilon(1e-10));
}

TEST_CASE("perimeter scaling law") {
  auto g = circle_grid(512);
  std::mt19937_64 rng(5);
  auto p = random_profile<2>(g, rng);
  CHECK(perimeter(scaled(p, 1.7)) == doctest::Approx(1.7 * perimeter(p)).epsilon(1e-12));

  auto g3 = icosphere_grid(3);
  auto p3 = random_profile<3>(g3, rng);
  CHECK(perimeter(scaled(p3, 1.7)) == doctest::Approx(1.7 * 1.7 * perimeter(p3)).epsilon(1e-12));
}

TEST_CASE("cap_profile requires a future timelike axis") {
  auto g = circle_grid(64);
  CHECK_THROWS(cap_profile(SVec<2>{0.0, {1.0, 0.0}}, 1.0, g));
  CHECK_THROWS(cap_profile(SVec<2>{-1.0, {0.0, 0.0}}, 1.0, g));
  CHECK_THROWS(cap_profile(time_axis<2>(), -1.0, g));
  auto cap = cap_profile(time_axis<2>(), 1.0, g);
  for (double f : cap.values) CHECK(f == doctest::Approx(1.0));
}

TEST_CASE("cap volume oracle values") {
  CHECK(cap_volume_oracle(2, 1.0) == doctest::Approx(2.0 * kPi / 3.0));
  CHECK(cap_volume_oracle(3, 1.0) == doctest::Approx(2.0 * kPi / 3.0));
  // 2 omega_2 l^3 / 3 at l = 2; cross-checked against dod_volume scaling
  CHECK(cap_volume_oracle(2, 2.0) == doctest::Approx(16.0 * kPi / 3.0));
  CHECK(matched_cap_radius(2, 2.0 * kPi) == doctest::Approx(1.0));
  CHECK(matched_cap_radius(3, 4.0 * kPi * 2.25) == doctest::Approx(1.5));
}

TEST_CASE("sampled envelopes and plumpness") {
  auto g = circle_grid(128);
  std::vector<double> f(g->size(), 1.0);
  ConeProfile<2> flat(g, f);
  auto up = upper_envelope(flat);
  auto lo = lower_envelope(flat);
  for (int i = 0; i < g->size(); ++i) {
    CHECK(up.values[i] == doctest::Approx(1.0));
    CHECK(lo.values[i] == doctest::Approx(1.0));
  }
  CHECK(is_plump(flat));

  // isolated downward spike at a single node is not plump
  f.assign(g->size(), 2.0);
  f[17] = 1.0;
  ConeProfile<2> spiked(g, f);
  CHECK_FALSE(is_plump(spiked));
  CHECK(is_plump(lower_envelope(upper_envelope(spiked))));

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_profile<2>(g, rng);
    // plumping: lower of upper envelope is plump (discrete morphology identity)
    CHECK(is_plump(lower_envelope(upper_envelope(p))));
  }
}

TEST_CASE("sector envelopes carry exact one-sided limits") {
  // f = 2 on [0, pi), 1 on [pi, 2pi); lsc boundary values
  SectorProfile f({0.0, kPi}, {2.0, 1.0}, {1.0, 1.0});
  auto up = upper_envelope(f);
  CHECK(up.boundary_values[0] == doctest::Approx(2.0));
  CHECK(up.boundary_values[1] == doctest::Approx(2.0));
  CHECK(up.sector_values[0] == doctest::Approx(2.0));
  CHECK(up.sector_values[1] == doctest::Approx(1.0));
  CHECK(up.closed);

  // Remark-style idempotence: ((f^sup)_inf)^sup = f^sup
  auto reg = upper_envelope(lower_envelope(up));
  CHECK(reg.boundary_values[0] == doctest::Approx(up.boundary_values[0]));
  CHECK(reg.boundary_values[1] == doctest::Approx(up.boundary_values[1]));

  CHECK(is_plump(f));  // pure jump with lsc boundary values is plump
  SectorProfile spike({0.0, kPi}, {2.0, 2.0}, {1.0, 2.0});
  CHECK_FALSE(is_plump(spike));  // strictly below both one-sided limits

  CHECK(perimeter(f) == doctest::Approx(2.0 * kPi + kPi));  // 2*pi + 1*pi
}

TEST_CASE("sector sampling keeps boundary values on matching nodes") {
  SectorProfile f({0.0, kPi}, {2.0, 1.0}, {1.0, 1.0});
  auto g = circle_grid(64);  // nodes include 0 and pi
  auto p = sampled_from_sectors(f, g);
  CHECK(p.values[0] == doctest::Approx(1.0));
  CHECK(p.values[32] == doctest::Approx(1.0));
  CHECK(p.values[1] == doctest::Approx(2.0));
  CHECK(p.values[33] == doctest::Approx(1.0));
}

TEST_CASE("euclidean lateral area and the perimeter comparison") {
  auto g = circle_grid(1024);
  ConeProfile<2> unit(g, std::vector<double>(g->size(), 1.0));
  CHECK(euclidean_lateral_area(unit) ==
        doctest::Approx(2.0 * std::sqrt(2.0) * kPi).epsilon(1e-5));

  auto g3 = icosphere_grid(4);
  ConeProfile<3> unit3(g3, std::vector<double>(g3->size(), 1.0));
  CHECK(euclidean_lateral_area(unit3) ==
        doctest::Approx(std::sqrt(2.0) * 4.0 * kPi).epsilon(2e-3));

  // perimeter <= area/sqrt(2), equality iff constant
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_profile<2>(g, rng);
    double lhs = perimeter(p);
    double rhs = euclidean_lateral_area(p) / std::sqrt(2.0);
    CHECK(lhs <= rhs + 1e-6 * rhs);
  }
  double flat_gap = euclidean_lateral_area(unit) / std::sqrt(2.0) - perimeter(unit);
  CHECK(std::abs(flat_gap) < 1e-4);

  SectorProfile sect({0.0, kPi}, {2.0, 1.0}, {1.0, 1.0});
  CHECK_THROWS(euclidean_lateral_area(sect));
}

TEST_CASE("profile constructor rejects bad values") {
  auto g = circle_grid(16);
  std::vector<double> f(g->size(), 1.0);
  f[3] = -1.0;
  CHECK_THROWS(ConeProfile<2>(g, f));
  f[3] = 0.0;
  CHECK_THROWS(ConeProfile<2>(g, f));
  CHECK_THROWS(ConeProfile<2>(g, std::vector<double>(7, 1.0)));
}
