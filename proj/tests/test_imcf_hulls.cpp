#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qlm/errors.hpp"
#include "qlm/imcf_hulls.hpp"
#include "qlm/numerics.hpp"
#include "qlm/profiles.hpp"
#include "qlm/quasimass.hpp"

using namespace qlm;
using doctest::Approx;

namespace {

// Brute force sup of m_H over radial hulls s <= r1, against r2: a dense
// scan, then a finer scan of the cells around the best grid point.
double region_mass_oracle(const RadialMetric& g, double lo, double r1, double r2) {
  auto grid = numerics::log_grid(lo, r1, 6000);
  const auto outer = numerics::log_grid(r1, r2, 3000);
  grid.insert(grid.end(), outer.begin() + 1, outer.end());
  const std::size_t n = grid.size();
  std::vector<double> area(n), suffix(n);
  for (std::size_t i = 0; i < n; ++i) area[i] = sphere_area(g, grid[i]);
  double run = INFINITY;
  for (std::size_t i = n; i-- > 0;) suffix[i] = run = std::min(run, area[i]);
  auto passes = [&](double s, double beyond) {
    const double a = sphere_area(g, s);
    return mean_curvature(g, s) >= 0 && beyond >= a * (1 - 1e-10);
  };
  double best = 0.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < n && grid[i] <= r1; ++i) {
    if (passes(grid[i], suffix[i]) && hawking_mass(g, grid[i]) > best) {
      best = hawking_mass(g, grid[i]);
      arg = i;
    }
  }
  if (arg == 0) return best;
  const double a = grid[arg - 1], b = std::min(grid[arg + 1], r1);
  const double beyond = suffix[arg + 1];
  const auto fine = numerics::linear_grid(a, b, 4001);
  std::vector<double> fine_area(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) fine_area[i] = sphere_area(g, fine[i]);
  double tail = beyond;
  for (std::size_t i = fine.size(); i-- > 0;) {
    tail = std::min(tail, fine_area[i]);
    if (passes(fine[i], tail)) best = std::max(best, hawking_mass(g, fine[i]));
  }
  return best;
}

}  // namespace

TEST_CASE("IMCF trace on Schwarzschild keeps the Hawking mass") {
  const double m = 1.0;
  const auto g = build_schwarzschild(m);
  const auto tr = imcf_trace(g, m, 100 * m, 33);
  REQUIRE(tr.samples.size() == 33);
  const auto& first = tr.samples.front();
  CHECK(first.t == 0.0);
  double dt = tr.samples[1].t - tr.samples[0].t;
  for (std::size_t i = 0; i < tr.samples.size(); ++i) {
    const auto& s = tr.samples[i];
    CHECK(s.hawking == Approx(m).epsilon(1e-12));
    CHECK(s.area == Approx(first.area * std::exp(s.t)).epsilon(1e-12));
    if (i > 0) CHECK(s.t - tr.samples[i - 1].t == Approx(dt).epsilon(1e-9));
  }
  CHECK(std::abs(geroch_report(tr)) < 1e-9);
}

TEST_CASE("IMCF is obstructed by a centred minimal sphere") {
  const auto g = build_g1({0.05});
  try {
    imcf_trace(g, 1.0, 10.0, 10);
    FAIL("expected FlowObstruction");
  } catch (const FlowObstruction& e) {
    CHECK(e.radius() > 5.0);
    CHECK(e.radius() < 6.5);
  }
  CHECK_THROWS_AS(imcf_trace(g, 10.0, 1.0, 10), OutOfDomain);
  CHECK_THROWS_AS(imcf_trace(g, 1.0, 2.0, 1), InvalidParams);
  ImcfTrace tiny;
  tiny.samples.resize(2);
  CHECK_THROWS_AS(geroch_report(tiny), InvalidParams);
}

TEST_CASE("Geroch monotonicity on g2") {
  const auto g = build_g2({0.5, 1.0, 2.0});
  const auto tr = imcf_trace(g, 1e-3, 200.0, 200);
  CHECK(geroch_report(tr) >= -1e-9);
  CHECK(tr.samples.back().hawking <= 0.5 + 1e-12);
}

TEST_CASE("sine area integral against Simpson") {
  CHECK(sine_area_integral(0.0, 3.0) == 4.5);
  CHECK(sine_area_integral(2.0, 0.0) == 0.0);
  for (double K : {1e-6, 0.01, 0.3, 1.0, 2.5, 10.0}) {
    for (double r : {1e-4, 0.1, 1.0, 3.0}) {
      const double ref = oracle::simpson(
          [K](double t) { return t == 0.0 ? 0.0 : std::pow(std::sin(K * t), 2) / (K * K * t); },
          0.0, r, 20000);
      CHECK(sine_area_integral(K, r) == Approx(ref).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(sine_area_integral(1.0, -1.0), InvalidParams);
}

TEST_CASE("alpha coefficient in flat space") {
  const auto g = build_flat();
  const auto a = alpha_coefficient(g, 1.0, 3.0, {});
  CHECK(a.distance == Approx(2.0).epsilon(1e-14));
  CHECK(a.region_outer == Approx(2.5).epsilon(1e-12));
  CHECK(a.curvature == 0.0);
  CHECK(a.iota_heuristic);
  CHECK(a.ball_radius == Approx(1.0));
  CHECK(a.alpha == Approx(std::sqrt(1.0 / (8.0 * std::numbers::pi))).epsilon(1e-12));

  AlphaParams big;
  big.C = 1e6;
  CHECK(alpha_coefficient(g, 1.0, 3.0, big).alpha == 1.0);
  AlphaParams small_iota;
  small_iota.iota = 0.1;
  const auto b = alpha_coefficient(g, 1.0, 3.0, small_iota);
  CHECK(b.ball_radius == 0.1);
  CHECK_FALSE(b.iota_heuristic);
  AlphaParams bad;
  bad.C = -1.0;
  CHECK_THROWS_AS(alpha_coefficient(g, 1.0, 3.0, bad), InvalidParams);
  CHECK_THROWS_AS(alpha_coefficient(g, 3.0, 1.0, {}), OutOfDomain);
}

TEST_CASE("radial hull check") {
  const auto s = build_schwarzschild(1.0);
  CHECK(radial_hull_check(s, 0.5, 10.0));
  CHECK(radial_hull_check(s, 2.0, 10.0));
  CHECK_FALSE(radial_hull_check(s, 0.3, 10.0));  // H < 0 inside the horizon
  const auto g = build_g1({0.05});
  CHECK(radial_hull_check(g, 1.0, 5.0));
  CHECK_FALSE(radial_hull_check(g, 1.0, 640.0));  // the neck has less area
  CHECK_THROWS_AS(radial_hull_check(g, 5.0, 1.0), OutOfDomain);
}

TEST_CASE("m_region against brute force") {
  CHECK(m_region(build_flat(), 1.0, 2.0).value == 0.0);
  const auto s = build_schwarzschild(1.0);
  CHECK(m_region(s, 2.0, 10.0).value == Approx(1.0).epsilon(1e-12));
  std::vector<RadialMetric> metrics;
  metrics.push_back(build_g1({0.05}));
  metrics.push_back(build_g2({0.5, 1.0, 2.0}));
  std::mt19937 rng(99);
  for (const auto& g : metrics) {
    const auto [lo, hi] = g.search_interval();
    std::uniform_real_distribution<double> X(std::log(1e-2), std::log(hi / 2));
    for (int i = 0; i < 6; ++i) {
      double r1 = std::exp(X(rng)), r2 = std::exp(X(rng));
      if (r1 > r2) std::swap(r1, r2);
      if (r2 < 1.01 * r1) continue;
      const auto got = m_region(g, r1, r2);
      const double ref = region_mass_oracle(g, std::min(lo, 1e-3 * r1), r1, r2);
      CHECK(got.value >= 0.0);
      INFO("r1=" << r1 << " r2=" << r2 << " got=" << got.value << " ref=" << ref);
      CHECK(got.value == Approx(ref).epsilon(1e-5));
      CHECK(got.value >= ref - 1e-12);
      if (got.found) CHECK(radial_hull_check(g, got.s, r2));
    }
  }
}

TEST_CASE("m_omega table, zero on flat and nonnegative") {
  const auto flat = m_omega(build_flat(), 1.0, {});
  CHECK(flat.value == 0.0);
  MOmegaOptions opt;
  opt.pairs = 24;
  const auto g = build_g2({0.5, 1.0, 2.0});
  const auto res = m_omega(g, 4.0, {}, opt);
  CHECK(res.value >= 0.0);
  CHECK(res.table.size() == 24u * 23u / 2u);
  for (const auto& p : res.table) {
    CHECK(res.value >= p.product);
    CHECK(p.region_mass >= 0.0);
  }
  // Grid-stage entries agree with direct evaluation.
  for (std::size_t k : {std::size_t{10}, std::size_t{100}, res.table.size() - 1}) {
    const auto& p = res.table[k];
    CHECK(p.region_mass == Approx(m_region(g, p.r1, p.r2).value).epsilon(1e-6).scale(1e-6));
    if (p.region_mass > 0.0)
      CHECK(p.alpha == Approx(alpha_coefficient(g, p.r1, p.r2, {}).alpha).epsilon(1e-6));
  }
  CHECK(res.best.product == Approx(res.best.alpha * res.best.region_mass));
}
