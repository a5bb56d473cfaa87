#include <doctest.h>

#include <random>

#include "lcone/arrival.hpp"
#include "lcone/conformal.hpp"
#include "lcone/random_fields.hpp"

using namespace lcone;

namespace {

// Independent oracle for the arrival field: bisect the largest t such that
// every past-cone trace point rho(omega) = (t^2 - r^2)/(2 (t - <x, omega>))
// stays strictly inside the interpolated profile. Validates the closed form
// u(x) = inf_theta [ f(theta) + |x - f(theta) theta| ].
double arrival_oracle(const ConeProfile<2>& p, const Vec<2>& x, int dense = 16384) {
  double r = norm(x);
  auto contained = [&](double t) {
    for (int i = 0; i < dense; ++i) {
      double th = 2.0 * kPi * i / dense;
      Vec<2> om{std::cos(th), std::sin(th)};
      double rho = (t * t - r * r) / (2.0 * (t - dot(x, om)));
      if (!(rho < p.grid->interpolate(p.values, om))) return false;
    }
    return true;
  };
  double lo = r, hi = r + 2.0 * p.max_value() + 1.0;
  if (!contained(lo + 1e-12)) return r;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    if (contained(mid))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("arrival closed form agrees with the trace-containment oracle") {
  auto g = circle_grid(512);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ur(0.0, 1.4), uth(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_profile<2>(g, rng);
    double rr = ur(rng), th = uth(rng);
    Vec<2> x{rr * std::cos(th), rr * std::sin(th)};
    double closed = arrival(p, x);
    double oracle = arrival_oracle(p, x);
    CHECK(closed == doctest::Approx(oracle).epsilon(5e-4));
    CHECK(closed >= oracle - 1e-9);  // the grid minimum sits above the true infimum
  }
}

TEST_CASE("arrival for the unit cap") {
  auto g = circle_grid(1024);
  ConeProfile<2> unit(g, std::vector<double>(g->size(), 1.0));
  CHECK(arrival(unit, Vec<2>{0.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(arrival(unit, Vec<2>{0.5, 0.0}) == doctest::Approx(1.5).epsilon(1e-5));
  CHECK(arrival(unit, Vec<2>{3.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-5));
}

TEST_CASE("arrival field invariants on sampled pairs") {
  auto g = circle_grid(512);
  std::mt19937_64 rng(43);
  auto p = random_profile<2>(g, rng);
  ArrivalField<2> u(p);
  std::uniform_real_distribution<double> uc(-1.5, 1.5);
  double rmax = p.max_value();
  for (int i = 0; i < 200; ++i) {
    Vec<2> x{uc(rng), uc(rng)};
    Vec<2> y{uc(rng), uc(rng)};
    CHECK(u(x) >= norm(x) - 1e-12);
    CHECK(std::abs(u(x) - u(y)) <= norm(x - y) + 1e-12);
    // beyond the cone: exact along node rays, small upward bias between them
    Vec<2> far = (rmax + 1.0 + std::abs(uc(rng))) * normalized(x);
    CHECK(u(far) == doctest::Approx(norm(far)).epsilon(1e-4));
    CHECK(u(far) >= norm(far) - 1e-12);
    Vec<2> far_node = (rmax + 1.5) * p.grid->node(i % p.grid->size());
    CHECK(u(far_node) == doctest::Approx(norm(far_node)).epsilon(1e-12));
  }
}

TEST_CASE("dod volume of caps against the analytic oracle") {
  auto g = circle_grid(512);
  ConeProfile<2> unit(g, std::vector<double>(g->size(), 1.0));
  VolumeOptions<2> opts;
  opts.radial_nodes = 512;
  CHECK(dod_volume(unit, opts) == doctest::Approx(cap_volume_oracle(2, 1.0)).epsilon(1e-5));

  // scaling law: volume ~ c^{n+1}
  auto big = scaled(unit, 1.3);
  CHECK(dod_volume(big, opts) ==
        doctest::Approx(std::pow(1.3, 3) * cap_volume_oracle(2, 1.0)).epsilon(1e-5));

  auto g3 = icosphere_grid(3);
  ConeProfile<3> unit3(g3, std::vector<double>(g3->size(), 1.0));
  VolumeOptions<3> opts3;
  opts3.radial_nodes = 128;
  CHECK(dod_volume(unit3, opts3) == doctest::Approx(cap_volume_oracle(3, 1.0)).epsilon(1e-4));
}

TEST_CASE("dod volume is Lorentz invariant on boosted caps") {
  auto g = circle_grid(512);
  double beta = 0.5;
  SVec<2> v{std::cosh(beta), {std::sinh(beta), 0.0}};
  auto cap = cap_profile(v, 1.0, g);
  VolumeOptions<2> opts;
  opts.radial_nodes = 512;
  CHECK(dod_volume(cap, opts) == doctest::Approx(cap_volume_oracle(2, 1.0)).epsilon(1e-2));
}

TEST_CASE("dod volume error decreases monotonically under refinement") {
  double exact = cap_volume_oracle(2, 1.0);
  double prev = 1e9;
  for (int m : {128, 256, 512}) {
    auto g = circle_grid(m);
    ConeProfile<2> unit(g, std::vector<double>(g->size(), 1.0));
    VolumeOptions<2> opts;
    opts.radial_nodes = m;
    double err = std::abs(dod_volume(unit, opts) - exact);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("volume monotone in the profile") {
  auto g = circle_grid(256);
  std::mt19937_64 rng(77);
  auto p = random_profile<2>(g, rng);
  auto q = p;
  for (auto& v : q.values) v += 0.1;
  VolumeOptions<2> opts;
  opts.radial_nodes = 256;
  CHECK(dod_volume(p, opts) <= dod_volume(q, opts) + 1e-12);
  // pointwise arrival monotonicity
  for (int i = 0; i < 50; ++i) {
    std::uniform_real_distribution<double> uc(-1.2, 1.2);
    Vec<2> x{uc(rng), uc(rng)};
    CHECK(arrival(p, x) <= arrival(q, x) + 1e-12);
  }
}

TEST_CASE("dod symmetric difference") {
  auto g = circle_grid(512);
  ConeProfile<2> unit(g, std::vector<double>(g->size(), 1.0));
  auto bigger = scaled(unit, 1.1);
  VolumeOptions<2> opts;
  opts.radial_nodes = 512;
  CHECK(dod_symdiff(unit, unit, opts) == doctest::Approx(0.0));
  double expect = (std::pow(1.1, 3) - 1.0) * cap_volume_oracle(2, 1.0);
  CHECK(dod_symdiff(unit, bigger, opts) == doctest::Approx(expect).epsilon(1e-4));
  CHECK(dod_symdiff(bigger, unit, opts) ==
        doctest::Approx(dod_symdiff(unit, bigger, opts)).epsilon(1e-12));

  // triangle inequality on random profiles
  std::mt19937_64 rng(99);
  auto a = random_profile<2>(g, rng);
  auto b = random_profile<2>(g, rng);
  auto c = random_profile<2>(g, rng);
  double ab = dod_symdiff(a, b, opts), bc = dod_symdiff(b, c, opts), ac = dod_symdiff(a, c, opts);
  CHECK(ac <= ab + bc + 1e-10);

  auto g2 = circle_grid(128);
  ConeProfile<2> other(g2, std::vector<double>(g2->size(), 1.0));
  CHECK_THROWS(dod_symdiff(unit, other, opts));
}

TEST_CASE("future sections obey the half-delta bound and converge") {
  auto g = circle_grid(256);
  ConeProfile<2> unit(g, std::vector<double>(g->size(), 1.0));
  auto sec = future_section(unit, 0.2);
  for (double v : sec.values) CHECK(v == doctest::Approx(0.9).epsilon(1e-9));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    auto p = random_profile<2>(g, rng);
    std::vector<double> prev;
    for (double delta : {0.2, 0.1, 0.05, 0.025}) {
      auto s = future_section(p, delta);
      for (int i = 0; i < g->size(); ++i) {
        CHECK(s.values[i] <= p.values[i] - delta / 2 + 1e-9);
        if (!prev.empty()) CHECK(s.values[i] >= prev[i] - 1e-9);  // monotone in delta
      }
      prev = s.values;
    }
    // f_delta -> f: at delta = 0.025 the gap is at most a few delta
    auto s = future_section(p, 0.025);
    for (int i = 0; i < g->size(); ++i) CHECK(p.values[i] - s.values[i] < 4 * 0.025);
  }
  CHECK_THROWS(future_section(unit, 0.0));
  CHECK_THROWS(future_section(unit, 2.0));
}

TEST_CASE("sector profiles: open and closed cones share volumes for pure jumps") {
  // pure jump: boundary values at the lsc limits
  SectorProfile open_jump({0.0, kPi}, {1.5, 1.0}, {1.0, 1.0}, false);
  auto closed_jump = upper_envelope(open_jump);
  double v_open = dod_volume(open_jump, 1024, 512);
  double v_closed = dod_volume(closed_jump, 1024, 512);
  CHECK(v_open == doctest::Approx(v_closed).epsilon(1e-10));

  // a downward spike genuinely shrinks the domain of dependence
  SectorProfile spiked({0.0, kPi}, {1.5, 1.5}, {0.6, 1.5}, false);
  SectorProfile plain({0.0, kPi}, {1.5, 1.5}, {1.5, 1.5}, false);
  double v_spiked = dod_volume(spiked, 1024, 512);
  double v_plain = dod_volume(plain, 1024, 512);
  CHECK(v_spiked < v_plain - 1e-2);
  CHECK(v_plain == doctest::Approx(cap_volume_oracle(2, 1.5)).epsilon(1e-4));
}

TEST_CASE("isoperimetric ratio is 1 for caps and below 1 off the extremal") {
  auto g = circle_grid(512);
  VolumeOptions<2> opts;
  opts.radial_nodes = 512;
  ConeProfile<2> unit(g, std::vector<double>(g->size(), 1.0));
  CHECK(isoperimetric_ratio(unit, opts) == doctest::Approx(1.0).epsilon(1e-3));

  std::vector<double> f(g->size());
  for (int i = 0; i < g->size(); ++i) f[i] = 1.0 + 0.3 * std::cos(2.0 * g->angle(i));
  ConeProfile<2> wavy(g, f);
  double ratio = isoperimetric_ratio(wavy, opts);
  CHECK(ratio < 1.0);
  // frozen regression value; converged pipeline gives 0.80296 at m = 2048
  CHECK(ratio == doctest::Approx(0.80305).epsilon(1e-4));
}
