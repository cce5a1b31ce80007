#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qlm/errors.hpp"
#include "qlm/horizons.hpp"
#include "qlm/profiles.hpp"

using namespace qlm;
using doctest::Approx;

TEST_CASE("Schwarzschild horizon at m/2") {
  for (double m : {0.5, 1.0, 3.0}) {
    const auto g = build_schwarzschild(m);
    const auto s = find_horizons(g);
    REQUIRE(s.horizons.size() == 1);
    const auto& h = s.horizons.front();
    CHECK(h.r == Approx(m / 2).epsilon(1e-12));
    CHECK(h.areal_radius == Approx(2 * m).epsilon(1e-12));
    CHECK(h.kind == HorizonKind::neck);
    CHECK(h.outermost);
    CHECK(h.outer_minimizing);
    CHECK(std::abs(penrose_check(g)) < 1e-10);
  }
}

TEST_CASE("g1 has its neck at 32/m and an inner bulge") {
  for (double m : {0.2, 0.05, 0.01}) {
    const auto g = build_g1({m});
    const auto s = find_horizons(g);
    REQUIRE(s.horizons.size() == 2);
    CHECK(s.horizons.front().kind == HorizonKind::bulge);
    CHECK_FALSE(s.horizons.front().outermost);
    const auto& neck = s.horizons.back();
    CHECK(neck.kind == HorizonKind::neck);
    CHECK(std::abs(neck.r - 32.0 / m) <= 1e-10 * 32.0 / m);
    CHECK(neck.outermost);
    CHECK(neck.outer_minimizing);
    CHECK(neck.areal_radius == Approx(2 * m).epsilon(1e-12));
    const auto rep = penrose_report(g);
    CHECK(std::abs(rep.deficit) < 1e-10);
    CHECK(rep.adm_mass == m);
  }
}

TEST_CASE("horizon-free metrics") {
  CHECK(find_horizons(build_flat()).horizons.empty());
  const auto g2 = build_g2({0.5, 1.0, 2.0});
  const auto s = find_horizons(g2);
  CHECK(s.horizons.empty());
  CHECK(s.min_mean_curvature > 0.0);
  CHECK_THROWS_AS(penrose_check(g2), NoHorizon);
}

TEST_CASE("partial window marks outermost correctly") {
  const auto g = build_g1({0.05});
  // The window stops before the neck, so the bulge is not outermost.
  const auto s = find_horizons(g, 0.1, 100.0);
  REQUIRE(s.horizons.size() == 1);
  CHECK(s.horizons.front().kind == HorizonKind::bulge);
  CHECK_FALSE(s.horizons.front().outermost);
  CHECK_THROWS_AS(find_horizons(g, 5.0, 1.0), OutOfDomain);
}
