#include "qlm/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qlm/errors.hpp"
#include "qlm/numerics.hpp"

namespace qlm {

namespace {

constexpr double kQuadTol = 1e-12;
constexpr int kBridgeSamples = 1024;

double inverse_sqrt(double x) { return 1.0 / std::sqrt(x); }

}  // namespace

HermiteBridge smooth_monotone_bridge(double ra, double rb, double fa, double fb,
                                     double sa, double sb, BridgeKind kind) {
  if (!std::isfinite(ra) || !std::isfinite(rb) || !(ra < rb))
    throw InvalidParams("bridge requires finite ra < rb");
  if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(sa) ||
      !std::isfinite(sb))
    throw InvalidParams("bridge data must be finite");
  if (fa < fb)
    throw NonMonotoneBridge("bridge end values increase; cannot be monotone");
  if (sa > 0.0 || sb > 0.0)
    throw NonMonotoneBridge("bridge end slopes must be nonpositive");

  HermiteBridge bridge(kind, ra, rb, fa, fb, sa, sb);

  const double len = rb - ra;
  const double tol =
      1e-12 * std::max({(fa - fb) / len, std::abs(sa), std::abs(sb)});
  const auto grid = numerics::linear_grid(ra, rb, kBridgeSamples + 1);
  std::vector<double> slope(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) slope[i] = bridge.slope(grid[i]);

  auto fail = [&](double where, double value) {
    std::ostringstream msg;
    msg << "Hermite bridge on [" << ra << ", " << rb
        << "] is not monotone: derivative " << value << " at r = " << where;
    throw NonMonotoneBridge(msg.str());
  };
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (slope[i] > tol) fail(grid[i], slope[i]);
    // Isolate sign changes hidden between samples around each local max.
    const bool peak = (i == 0 || slope[i] >= slope[i - 1]) &&
                      (i + 1 == grid.size() || slope[i] >= slope[i + 1]);
    if (!peak || i == 0 || i + 1 == grid.size()) continue;
    const double x = numerics::maximise(
        [&](double r) { return bridge.slope(r); }, grid[i - 1], grid[i + 1]);
    const double peak_value = bridge.slope(x);
    if (peak_value > tol) fail(x, peak_value);
  }
  return bridge;
}

RadialMetric build_flat() {
  std::vector<Segment> segs{
      {0.0, std::numeric_limits<double>::infinity(), segment::Harmonic{1.0, 0.0}}};
  AsymptoticTail tail{AsymptoticTail::Kind::flat, 0.0, 1.0, 0.0};
  return RadialMetric(RadialProfile(std::move(segs)), tail, "flat", 1.0);
}

RadialMetric build_schwarzschild(double m) {
  if (!std::isfinite(m) || m < 0.0)
    throw InvalidParams("schwarzschild mass must be >= 0");
  if (m == 0.0) return build_flat();
  std::vector<Segment> segs{{0.0, std::numeric_limits<double>::infinity(),
                             segment::Harmonic{1.0, 0.5 * m}}};
  AsymptoticTail tail{AsymptoticTail::Kind::schwarzschild, m, 1.0, 0.0};
  std::ostringstream desc;
  desc << "schwarzschild(m=" << m << ")";
  return RadialMetric(RadialProfile(std::move(segs)), tail, desc.str(), m);
}

double g2_inner_value(const G2Params& p) {
  if (!(p.m > 0.0) || !(p.rho0 > p.m) || !(p.rho1 > p.rho0) ||
      !std::isfinite(p.rho1)) {
    std::ostringstream msg;
    msg << "g2 requires rho1 > rho0 > m > 0 (got m=" << p.m
        << ", rho0=" << p.rho0 << ", rho1=" << p.rho1 << ")";
    throw InvalidParams(msg.str());
  }
  const auto h =
      smooth_monotone_bridge(p.rho0, p.rho1, 0.0, -0.5 * p.m, 0.0, 0.0, p.bridge);
  const double c0 = 1.0 + p.m / (2.0 * p.rho1);
  const double integral = numerics::integrate(
      [&h](double t) { return h.value(t) / (t * t); }, p.rho0, p.rho1, kQuadTol);
  return c0 - integral;
}

RadialMetric build_g2(const G2Params& p) {
  const double inner = g2_inner_value(p);
  const auto h =
      smooth_monotone_bridge(p.rho0, p.rho1, 0.0, -0.5 * p.m, 0.0, 0.0, p.bridge);
  std::vector<Segment> segs{
      {0.0, p.rho0, segment::Harmonic{inner, 0.0}},
      {p.rho0, p.rho1, segment::Bridged{h, inner}},
      {p.rho1, std::numeric_limits<double>::infinity(),
       segment::Harmonic{1.0, 0.5 * p.m}},
  };
  AsymptoticTail tail{AsymptoticTail::Kind::schwarzschild, p.m, 1.0, p.rho1};
  std::ostringstream desc;
  desc << "g2(m=" << p.m << ", rho0=" << p.rho0 << ", rho1=" << p.rho1
       << ", bridge=" << to_string(p.bridge) << ")";
  return RadialMetric(RadialProfile(std::move(segs)), tail, desc.str(), p.rho1);
}

G1Construction g1_construction(const G1Params& p) {
  const double m = p.m;
  if (!std::isfinite(m) || !(m > 0.0))
    throw InvalidParams("g1 requires m > 0");
  G1Construction c;
  c.m = m;
  c.epsilon = m * m / 64.0;
  c.rho0 = 1.0 / (4.0 * m);
  const double sqrt_eps = std::sqrt(c.epsilon);
  const double tail_coeff = m / (2.0 * sqrt_eps);  // k = -tail_coeff / rho^2
  const double rho0 = c.rho0;
  const double base = 1.0 + 0.25 * rho0 * rho0;

  c.k_rho0 = -0.25 * rho0 * std::pow(base, -1.5);
  c.k_2rho0 = -tail_coeff / (4.0 * rho0 * rho0);

  // Delta u = (rho^2 k)' / rho^2, so the bridge is placed on q = rho^2 k.
  const double q_a = rho0 * rho0 * c.k_rho0;
  const double q_b = -tail_coeff;
  const double slope_a = -0.75 * rho0 * rho0 * std::pow(base, -2.5);
  if (!(q_a > q_b)) {
    std::ostringstream msg;
    msg << "g1 gluing not admissible for m=" << m
        << ": rho^2 k must decrease across [rho0, 2 rho0]";
    throw InvalidParams(msg.str());
  }
  try {
    c.q = smooth_monotone_bridge(rho0, 2.0 * rho0, q_a, q_b, slope_a, 0.0,
                                 p.bridge);
  } catch (const NonMonotoneBridge& e) {
    throw InvalidParams(std::string("g1 gluing not admissible: ") + e.what());
  }
  const auto& q = c.q;
  c.bridge_integral = numerics::integrate(
      [&q](double t) { return q.value(t) / (t * t); }, rho0, 2.0 * rho0,
      kQuadTol);
  // b0 = m/(4 sqrt(eps) rho0) + sqrt(eps) - int_0^{2 rho0} k.
  const double cap_integral = inverse_sqrt(base) - 1.0;
  c.b0 = m / (4.0 * sqrt_eps * rho0) + sqrt_eps - cap_integral -
         c.bridge_integral;
  c.horizon_radius = m / (2.0 * c.epsilon);
  return c;
}

RadialMetric build_g1(const G1Params& p) {
  const auto c = g1_construction(p);
  const double sqrt_eps = std::sqrt(c.epsilon);
  const double cap_shift = c.b0 - 1.0;
  const double u_rho0 = cap_shift + inverse_sqrt(1.0 + 0.25 * c.rho0 * c.rho0);
  std::vector<Segment> segs{
      {0.0, c.rho0, segment::SphereCap{cap_shift}},
      {c.rho0, 2.0 * c.rho0, segment::Bridged{c.q, u_rho0}},
      {2.0 * c.rho0, std::numeric_limits<double>::infinity(),
       segment::Harmonic{sqrt_eps, p.m / (2.0 * sqrt_eps)}},
  };
  AsymptoticTail tail{AsymptoticTail::Kind::schwarzschild, p.m, sqrt_eps,
                      2.0 * c.rho0};
  std::ostringstream desc;
  desc << "g1(m=" << p.m << ", bridge=" << to_string(p.bridge) << ")";
  RadialMetric metric(RadialProfile(std::move(segs)), tail, desc.str(), 1.0);

  const auto [lo, hi] = metric.search_interval();
  for (double r : numerics::log_grid(lo, hi, 4096)) {
    if (!(metric.eval(r).u > 0.0)) {
      std::ostringstream msg;
      msg << "g1 conformal factor not positive at r=" << r << " for m=" << p.m;
      throw InvalidParams(msg.str());
    }
  }
  return metric;
}

}  // namespace qlm
