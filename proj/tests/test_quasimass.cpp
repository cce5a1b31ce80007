#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qlm/errors.hpp"
#include "qlm/profiles.hpp"
#include "qlm/quasimass.hpp"

using namespace qlm;
using doctest::Approx;

TEST_CASE("Hawking and Brown-York masses on Schwarzschild") {
  for (double m : {0.5, 1.0, 2.0}) {
    const auto g = build_schwarzschild(m);
    for (double r : {0.3 * m, 0.5 * m, m, 10.0 * m, 1e3 * m}) {
      CHECK(hawking_mass(g, r) == Approx(m).epsilon(1e-14));
      CHECK(brown_york_radial(g, r) == Approx(m * (1.0 + m / (2.0 * r))).epsilon(1e-14));
    }
    CHECK(adm_mass(g) == Approx(m).epsilon(1e-15));
  }
}

TEST_CASE("mass identities hold on random spheres of every metric") {
  std::vector<RadialMetric> metrics;
  metrics.push_back(build_g1({0.07}));
  metrics.push_back(build_g2({0.3, 0.7, 1.9}));
  metrics.push_back(build_schwarzschild(1.7));
  std::mt19937 rng(2024);
  for (const auto& g : metrics) {
    const auto [lo, hi] = g.search_interval();
    std::uniform_real_distribution<double> X(std::log(lo * 10), std::log(hi));
    for (int i = 0; i < 100; ++i) {
      const double r = std::exp(X(rng));
      const double R = areal_radius(g, r);
      const double H = mean_curvature(g, r);
      // (|S|/16pi)^{1/2} (1 - (1/16pi) int H^2) with H constant on S_r.
      const double area = sphere_area(g, r);
      const double hawking_def =
          std::sqrt(area / (16 * std::numbers::pi)) * (1.0 - area * H * H / (16 * std::numbers::pi));
      CHECK(hawking_mass(g, r) == Approx(hawking_def).epsilon(1e-10).scale(R));
      CHECK(brown_york_radial(g, r) ==
            Approx(brown_york_from_curvature(g, r)).epsilon(1e-10).scale(R));
      // m_BY - m_H = (R/2)(1 - RH/2)^2 >= 0.
      CHECK(brown_york_radial(g, r) - hawking_mass(g, r) >= -1e-12 * R);
      const auto sum = mass_summary(g, r);
      CHECK(sum.hawking == hawking_mass(g, r));
      CHECK(sum.areal_radius == R);
    }
  }
}

TEST_CASE("ADM mass of tagged and untagged metrics") {
  CHECK(adm_mass(build_flat()) == 0.0);
  CHECK(adm_mass(build_g1({0.05})) == 0.05);
  CHECK(adm_mass(build_g2({0.5, 1.0, 2.0})) == 0.5);

  // Untagged Schwarzschild on a finite domain goes through the fit.
  const double m = 0.8;
  const RadialMetric fit(RadialProfile({{0.0, 1e6, segment::Harmonic{1.0, 0.5 * m}}}), {},
                         "untagged", 1.0);
  CHECK(adm_mass(fit) == Approx(m).epsilon(1e-10));

  // Not asymptotically flat: u tends to 2.
  const RadialMetric bad(RadialProfile({{0.0, 1e6, segment::Harmonic{2.0, 0.1}}}), {}, "bad",
                         1.0);
  CHECK_THROWS_AS(adm_mass(bad), NotAsymptoticallyFlat);
}

TEST_CASE("torus Hawking mass") {
  CHECK(torus_hawking_mass(1.0, 4.0) == Approx(std::sqrt(0.5) / 2.0).epsilon(1e-15));
  CHECK(torus_hawking_mass(1.0, 8.0) == 0.0);
  CHECK(torus_hawking_mass(1.0, 7.9) > 0.0);
  CHECK(torus_hawking_mass(1.0, 8.1) < 0.0);
  CHECK(torus_hawking_mass(2.5, 20.0) == 0.0);
  CHECK_THROWS_AS(torus_hawking_mass(-1.0, 1.0), InvalidParams);
}
