#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qlm/errors.hpp"
#include "qlm/numerics.hpp"
#include "qlm/profiles.hpp"

using namespace qlm;
using doctest::Approx;

namespace {

// Quintic Hermite with zero end second derivatives, written out from the
// basis polynomials rather than through the library.
double quintic(double x, double h, double fa, double fb, double sa, double sb) {
  const double x3 = x * x * x, x4 = x3 * x, x5 = x4 * x;
  const double h00 = 1 - 10 * x3 + 15 * x4 - 6 * x5;
  const double h10 = x - 6 * x3 + 8 * x4 - 3 * x5;
  const double h11 = -4 * x3 + 7 * x4 - 3 * x5;
  return fa * h00 + fb * (1 - h00) + h * (sa * h10 + sb * h11);
}

void check_nonnegative_scalar_curvature(const RadialMetric& g) {
  const auto [lo, hi] = g.search_interval();
  double worst = 0.0;
  for (double r : numerics::log_grid(lo, hi, 3000))
    worst = std::min(worst, scalar_curvature(g, r) * std::pow(g.eval(r).u, 4) * r * r);
  CHECK(worst > -1e-12);
}

}  // namespace

TEST_CASE("g2 inner value against an independent quadrature") {
  for (const auto p : {G2Params{1.0, 2.0, 3.0}, G2Params{0.1, 0.2, 0.4}, G2Params{0.5, 1.0, 2.0}}) {
    const double w = p.rho1 - p.rho0;
    const double integral = oracle::simpson(
        [&](double t) {
          return quintic((t - p.rho0) / w, w, 0.0, -0.5 * p.m, 0.0, 0.0) / (t * t);
        },
        p.rho0, p.rho1);
    const double expected = 1.0 + p.m / (2.0 * p.rho1) - integral;
    CHECK(g2_inner_value(p) == Approx(expected).epsilon(1e-12));
    const auto g = build_g2(p);
    CHECK(g.eval(0.5 * p.rho0).u == Approx(expected).epsilon(1e-12));
    CHECK(g.eval(2.0 * p.rho1).u == Approx(1.0 + p.m / (4.0 * p.rho1)).epsilon(1e-15));
    CHECK(g.profile().max_junction_mismatch() < 1e-10);
    check_nonnegative_scalar_curvature(g);
  }
}

TEST_CASE("g2 parameter constraints") {
  CHECK_THROWS_AS(build_g2({1.0, 0.5, 3.0}), InvalidParams);
  CHECK_THROWS_AS(build_g2({1.0, 2.0, 2.0}), InvalidParams);
  CHECK_THROWS_AS(build_g2({-1.0, 2.0, 3.0}), InvalidParams);
  CHECK_NOTHROW(build_g2({1.0, 2.0, 3.0, BridgeKind::cubic}));
}

TEST_CASE("g1 construction constants") {
  for (double m : {0.2, 0.1, 0.05, 0.01, 0.003}) {
    const auto c = g1_construction({m});
    CHECK(c.epsilon == Approx(m * m / 64.0).epsilon(1e-15));
    CHECK(c.rho0 == Approx(0.25 / m).epsilon(1e-15));
    CHECK(c.horizon_radius == Approx(32.0 / m).epsilon(1e-15));
    CHECK(c.k_2rho0 == Approx(-16.0 * m * m).epsilon(1e-14));
    CHECK(c.k_rho0 == Approx(-32.0 * m * m / std::pow(1.0 + 64.0 * m * m, 1.5)).epsilon(1e-13));
    // Bound on the bridge integral of k.
    CHECK(c.bridge_integral <= 0.0);
    CHECK(c.bridge_integral >= -16.0 * m);

    const double w = c.rho0;
    const double q_a = c.rho0 * c.rho0 * c.k_rho0;
    const double s_a = -0.75 * c.rho0 * c.rho0 * std::pow(1.0 + 0.25 * c.rho0 * c.rho0, -2.5);
    const double ref = oracle::simpson(
        [&](double t) { return quintic((t - c.rho0) / w, w, q_a, -4.0, s_a, 0.0) / (t * t); },
        c.rho0, 2.0 * c.rho0);
    CHECK(c.bridge_integral == Approx(ref).epsilon(1e-11));

    const auto g = build_g1({m});
    CHECK(g.eval(1e-9).u == Approx(c.b0).epsilon(1e-12));
    const double se = m / 8.0;
    for (double rho : {2.0 * c.rho0, 32.0 / m, 1e4 / m})
      CHECK(g.eval(rho).u == Approx(se * (1.0 + m / (2.0 * c.epsilon * rho))).epsilon(1e-13));
    CHECK(g.tail().kind == AsymptoticTail::Kind::schwarzschild);
    CHECK(g.tail().mass == m);
    CHECK(g.profile().max_junction_mismatch() < 1e-9);
    check_nonnegative_scalar_curvature(g);
  }
}

TEST_CASE("g1 cap is a round unit sphere shifted by b0 - 1") {
  const auto c = g1_construction({0.05});
  const auto g = build_g1({0.05});
  for (double r : {0.1, 1.0, 3.0}) {
    const double w = 1.0 / std::sqrt(1.0 + 0.25 * r * r);
    CHECK(g.eval(r).u == Approx(c.b0 - 1.0 + w).epsilon(1e-14));
  }
  CHECK_THROWS_AS(build_g1({0.0}), InvalidParams);
  CHECK_THROWS_AS(build_g1({-0.1}), InvalidParams);
}

TEST_CASE("Schwarzschild and flat builders") {
  const auto s = build_schwarzschild(2.0);
  CHECK(s.eval(4.0).u == 1.25);
  CHECK(s.tail().mass == 2.0);
  const auto f = build_schwarzschild(0.0);
  CHECK(f.eval(3.0).u == 1.0);
  CHECK(build_flat().eval(1e-6).u == 1.0);
  CHECK_THROWS_AS(build_schwarzschild(-1.0), InvalidParams);
}
