#include "qlm/imcf_hulls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qlm/errors.hpp"
#include "qlm/numerics.hpp"
#include "qlm/quasimass.hpp"

namespace qlm {

namespace {

constexpr double kAreaTol = 1e-10;

double area_tolerance(double area) { return kAreaTol * std::max(1.0, area); }

// Smallest radius used when a construction needs the region "all the way in".
double inner_floor(const RadialMetric& metric, double r) {
  const double lo = metric.search_interval().first;
  const double floor = std::min(lo, 1e-3 * r);
  return metric.contains(floor) ? floor : lo;
}

bool hull_check(const RadialMetric& metric, double s, double r2, int grid) {
  if (mean_curvature(metric, s) < 0.0) return false;
  const double reference = sphere_area(metric, s);
  return min_sphere_area(metric, s, r2, grid) >=
         reference - area_tolerance(reference);
}

void require_in_domain(const RadialMetric& metric, double r, const char* what) {
  if (!metric.contains(r)) {
    std::ostringstream msg;
    msg << what << " = " << r << " is outside the domain of "
        << metric.description();
    throw OutOfDomain(msg.str());
  }
}

// Grid quantities shared by every hull query below a fixed outer radius.
struct HullScan {
  std::vector<double> r, area, hawking;
  std::vector<bool> mean_convex;

  HullScan(const RadialMetric& metric, std::vector<double> radii)
      : r(std::move(radii)) {
    area.resize(r.size());
    hawking.resize(r.size());
    mean_convex.resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto v = metric.eval(r[i]);
      area[i] = 4.0 * std::numbers::pi * std::pow(v.u * v.u * r[i], 2);
      hawking[i] = hawking_mass(metric, r[i]);
      mean_convex[i] = v.u + 2.0 * r[i] * v.du >= 0.0;
    }
  }

  std::size_t index_of(double x) const {
    const auto it = std::lower_bound(r.begin(), r.end(), x);
    return static_cast<std::size_t>(it - r.begin());
  }

  // best[k] = max Hawking mass over passing grid points <= k, for hulls
  // checked against the outer radius r[outer]. -inf where nothing passes.
  std::vector<double> prefix_best(std::size_t outer) const {
    std::vector<double> suffix_min(outer + 1);
    double running = std::numeric_limits<double>::infinity();
    for (std::size_t k = outer + 1; k-- > 0;) {
      running = std::min(running, area[k]);
      suffix_min[k] = running;
    }
    std::vector<double> best(outer + 1);
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= outer; ++k) {
      if (mean_convex[k] && area[k] - area_tolerance(area[k]) <= suffix_min[k])
        top = std::max(top, hawking[k]);
      best[k] = top;
    }
    return best;
  }
};

std::vector<double> merged_grid(std::vector<double> grid,
                                const std::vector<double>& extra) {
  grid.insert(grid.end(), extra.begin(), extra.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

ImcfTrace imcf_trace(const RadialMetric& metric, double r_start, double r_end,
                     int n) {
  if (n < 2) throw InvalidParams("imcf_trace needs at least two samples");
  if (!(r_start < r_end)) throw OutOfDomain("imcf_trace requires r_start < r_end");
  require_in_domain(metric, r_start, "r_start");
  require_in_domain(metric, r_end, "r_end");

  const auto grid = numerics::radial_grid(r_start, r_end, std::max(4096, 4 * n));
  std::vector<double> R(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(mean_curvature(metric, grid[i]) > 0.0)) {
      std::ostringstream msg;
      msg << "inverse mean curvature flow obstructed: H <= 0 at r = "
          << grid[i];
      throw FlowObstruction(msg.str(), grid[i]);
    }
    R[i] = areal_radius(metric, grid[i]);
    if (i > 0 && !(R[i] > R[i - 1])) {
      std::ostringstream msg;
      msg << "areal radius not increasing at r = " << grid[i];
      throw FlowObstruction(msg.str(), grid[i]);
    }
  }

  const double R0 = R.front();
  const double t_end = 2.0 * std::log(R.back() / R0);
  ImcfTrace trace;
  trace.samples.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double r = 0.0;
    if (k == 0) {
      r = r_start;
    } else if (k == n - 1) {
      r = r_end;
    } else {
      const double target = R0 * std::exp(0.5 * t_end * k / (n - 1));
      const auto hi = static_cast<std::size_t>(
          std::upper_bound(R.begin(), R.end(), target) - R.begin());
      const std::size_t lo_i = hi == 0 ? 0 : hi - 1;
      const std::size_t hi_i = std::min(hi, R.size() - 1);
      r = numerics::bisect_root(
          [&](double x) { return areal_radius(metric, x) - target; }, grid[lo_i],
          grid[hi_i], 1e-15);
    }
    ImcfSample s;
    s.r = r;
    s.areal_radius = areal_radius(metric, r);
    s.t = 2.0 * std::log(s.areal_radius / R0);
    s.area = 4.0 * std::numbers::pi * s.areal_radius * s.areal_radius;
    s.hawking = hawking_mass(metric, r);
    trace.samples.push_back(s);
  }
  return trace;
}

double geroch_report(const ImcfTrace& trace) {
  const auto& s = trace.samples;
  if (s.size() < 3) throw InvalidParams("geroch_report needs >= 3 samples");
  double slope = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double dt = s[i + 1].t - s[i].t;
    if (!(dt > 0.0)) continue;
    slope = std::min(slope, (s[i + 1].hawking - s[i].hawking) / dt);
  }
  return slope;
}

bool radial_hull_check(const RadialMetric& metric, double s, double r2) {
  if (!(s < r2)) throw OutOfDomain("radial_hull_check requires s < r2");
  require_in_domain(metric, s, "s");
  require_in_domain(metric, r2, "r2");
  return hull_check(metric, s, r2, 4096);
}

namespace {

// Cin(x) = int_0^x (1 - cos y) / y dy. The power series is used where its
// terms stay small; beyond that the remainder is a smooth quadrature.
double cin(double x) {
  constexpr double kSeriesLimit = 4.0;
  const double head = std::min(x, kSeriesLimit);
  const double x2 = head * head;
  double term = 1.0, sum = 0.0;
  for (int k = 1; k < 40; ++k) {
    term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
    const double add = -term / (2.0 * k);
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
  }
  if (x <= kSeriesLimit) return sum;
  return sum + numerics::integrate(
                   [](double y) { return (1.0 - std::cos(y)) / y; },
                   kSeriesLimit, x, 1e-13 * x);
}

}  // namespace

double sine_area_integral(double K, double r) {
  if (!(r >= 0.0)) throw InvalidParams("integration radius must be >= 0");
  if (!(K >= 0.0)) throw InvalidParams("curvature constant must be >= 0");
  if (K == 0.0 || r == 0.0) return 0.5 * r * r;
  // K^{-2} int_0^r sin^2(K t) / t dt = Cin(2 K r) / (2 K^2).
  return cin(2.0 * K * r) / (2.0 * K * K);
}

namespace {

// Running maxima of the sectional-curvature bound and of the areal radius
// over [floor, x], tabulated at nodes so that many alpha evaluations with a
// common floor only pay for the stretch beyond the last node.
class RegionBounds {
 public:
  RegionBounds(const RadialMetric& metric, double floor, double outer,
               const SectionalBoundOptions& curvature)
      : metric_(metric), floor_(floor), fine_(curvature) {
    fine_.base_grid = std::max(16, curvature.base_grid / 16);
    nodes_ = numerics::log_grid(floor, outer, 257);
    k_.assign(nodes_.size(), 0.0);
    widest_.assign(nodes_.size(), areal_radius(metric, floor));
    k_[0] = max_abs_sectional(metric, floor, floor * (1.0 + 1e-12), fine_);
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
      k_[i] = std::max(k_[i - 1], max_abs_sectional(metric, nodes_[i - 1], nodes_[i], fine_));
      widest_[i] = std::max(widest_[i - 1], local_widest(nodes_[i - 1], nodes_[i]));
    }
  }

  double floor() const { return floor_; }

  double curvature(double x) const {
    const std::size_t i = node_below(x);
    double k = k_[i];
    if (x > nodes_[i]) k = std::max(k, max_abs_sectional(metric_, nodes_[i], x, fine_));
    return fine_.convention == CurvatureConvention::sqrt_bound ? std::sqrt(k) : k;
  }

  double widest(double x) const {
    const std::size_t i = node_below(x);
    return x > nodes_[i] ? std::max(widest_[i], local_widest(nodes_[i], x)) : widest_[i];
  }

 private:
  std::size_t node_below(double x) const {
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    return it == nodes_.begin() ? 0 : static_cast<std::size_t>(it - nodes_.begin()) - 1;
  }

  double local_widest(double a, double b) const {
    double w = 0.0;
    for (double r : numerics::linear_grid(a, b, 17)) w = std::max(w, areal_radius(metric_, r));
    return w;
  }

  const RadialMetric& metric_;
  double floor_;
  SectionalBoundOptions fine_;
  std::vector<double> nodes_, k_, widest_;
};

void check_alpha_params(const AlphaParams& params) {
  if (!(params.C > 0.0) || !std::isfinite(params.C))
    throw InvalidParams("alpha: C must be a positive number");
  if (params.iota && !(*params.iota > 0.0))
    throw InvalidParams("alpha: iota must be positive");
}

AlphaResult alpha_impl(const RadialMetric& metric, double r1, double r2,
                       const AlphaParams& params, const RegionBounds* cache) {
  if (!(r1 < r2)) throw OutOfDomain("alpha requires r1 < r2");
  require_in_domain(metric, r1, "r1");
  require_in_domain(metric, r2, "r2");

  AlphaResult out;
  out.distance = radial_distance(metric, r1, r2, params.distance_tol);
  const double quarter = 0.25 * out.distance;

  // dist(sigma, r2) = d/4 by safeguarded Newton; d/dsigma dist = -u^2.
  double lo = r1, hi = r2;
  double sigma = 0.5 * (r1 + r2);
  for (int it = 0; it < 100; ++it) {
    const double g = radial_distance(metric, sigma, r2, params.distance_tol) - quarter;
    if (g > 0.0) lo = sigma; else hi = sigma;
    const double u = metric.eval(sigma).u;
    double next = sigma + g / (u * u);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - sigma) <= 1e-14 * sigma || hi - lo <= 1e-14 * hi) {
      sigma = next;
      break;
    }
    sigma = next;
  }
  out.region_outer = sigma;

  const double floor = inner_floor(metric, r1);
  const bool cached = cache != nullptr && cache->floor() == floor;
  out.curvature = cached ? cache->curvature(sigma)
                         : sectional_bounds(metric, floor, sigma, params.curvature);

  if (params.iota) {
    out.iota = *params.iota;
  } else {
    out.iota_heuristic = true;
    double widest = 0.0;
    if (cached) {
      widest = cache->widest(sigma);
    } else {
      for (double r : numerics::radial_grid(floor, sigma, 4096))
        widest = std::max(widest, areal_radius(metric, r));
    }
    out.iota = widest;
    if (out.curvature > 0.0)
      out.iota = std::min(out.iota, std::numbers::pi / out.curvature);
  }
  out.ball_radius = std::min(0.5 * out.distance, out.iota);
  out.area_estimate = params.C * sine_area_integral(out.curvature, out.ball_radius);
  out.inner_area = sphere_area(metric, r1);
  out.alpha_squared = std::min(out.area_estimate / out.inner_area, 1.0);
  out.alpha = std::sqrt(out.alpha_squared);
  return out;
}

}  // namespace

AlphaResult alpha_coefficient(const RadialMetric& metric, double r1, double r2,
                              const AlphaParams& params) {
  check_alpha_params(params);
  return alpha_impl(metric, r1, r2, params, nullptr);
}

RegionMass m_region(const RadialMetric& metric, double r1, double r2,
                    const HullOptions& options) {
  if (!(r1 < r2)) throw OutOfDomain("m_region requires r1 < r2");
  require_in_domain(metric, r1, "r1");
  require_in_domain(metric, r2, "r2");

  const double floor = inner_floor(metric, r1);
  auto grid = numerics::log_grid(floor, r1, options.grid);
  const auto outer = numerics::radial_grid(r1, r2, std::max(2, options.grid / 2));
  HullScan scan(metric, merged_grid(std::move(grid), outer));
  const std::size_t i2 = scan.index_of(r2);
  const std::size_t i1 = scan.index_of(r1);
  const auto best = scan.prefix_best(i2);

  RegionMass out;
  if (!std::isfinite(best[i1])) return out;

  // Grid argmax among s <= r1, confirmed with the exact hull check.
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k <= i1; ++k) order.push_back(k);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return scan.hawking[a] > scan.hawking[b];
  });
  double top = -std::numeric_limits<double>::infinity();
  std::size_t arg = 0;
  for (std::size_t k : order) {
    if (scan.hawking[k] <= 0.0) break;
    if (hull_check(metric, scan.r[k], r2, options.grid)) {
      top = scan.hawking[k];
      arg = k;
      break;
    }
  }
  if (!std::isfinite(top)) return out;

  double s_best = scan.r[arg];
  if (options.refine && arg > 0) {
    const double a = scan.r[arg - 1];
    const double b = std::min(scan.r[std::min(arg + 1, i1)], r1);
    if (a < b) {
      // Competitors beyond b are shared by every s in [a, b].
      const double beyond = min_sphere_area(metric, b, r2, options.grid);
      auto objective = [&](double s) {
        if (mean_curvature(metric, s) < 0.0) return -1e300;
        const double area = sphere_area(metric, s);
        const double lowest = std::min(beyond, min_sphere_area(metric, s, b, 64));
        if (lowest < area - area_tolerance(area)) return -1e300;
        return hawking_mass(metric, s);
      };
      const double x = numerics::maximise(objective, a, b);
      const double fx = objective(x);
      if (fx > top) {
        top = fx;
        s_best = x;
      }
    }
  }
  out.found = top > 0.0;
  out.value = std::max(0.0, top);
  out.s = out.found ? s_best : 0.0;
  return out;
}

MOmegaResult m_omega(const RadialMetric& metric, double r_out,
                     const AlphaParams& params, const MOmegaOptions& options) {
  require_in_domain(metric, r_out, "r_out");
  if (options.pairs < 2) throw InvalidParams("m_omega needs >= 2 radii per axis");
  if (!(options.r_lo_factor > 0.0 && options.r_lo_factor < 1.0))
    throw InvalidParams("m_omega: r_lo_factor must lie in (0, 1)");

  MOmegaResult out;
  out.C = params.C;
  out.iota = params.iota;
  out.convention = params.curvature.convention;
  out.options = options;

  double lo = r_out * options.r_lo_factor;
  if (!metric.contains(lo)) lo = metric.search_interval().first;
  const auto radii = numerics::log_grid(lo, r_out, options.pairs);
  const double floor = inner_floor(metric, lo);
  HullScan scan(metric,
                merged_grid(numerics::log_grid(floor, r_out, 4 * options.hull.grid),
                            radii));

  check_alpha_params(params);
  const RegionBounds bounds(metric, floor, r_out, params.curvature);
  const auto alpha_of = [&](double r1, double r2) {
    return alpha_impl(metric, r1, r2, params, &bounds).alpha;
  };

  PairValue best;
  for (std::size_t j = 1; j < radii.size(); ++j) {
    const auto prefix = scan.prefix_best(scan.index_of(radii[j]));
    for (std::size_t i = 0; i < j; ++i) {
      PairValue pv;
      pv.r1 = radii[i];
      pv.r2 = radii[j];
      pv.region_mass = std::max(0.0, prefix[scan.index_of(radii[i])]);
      if (pv.region_mass > 0.0) {
        pv.alpha = alpha_of(pv.r1, pv.r2);
        pv.product = pv.alpha * pv.region_mass;
      }
      ++out.pairs_evaluated;
      out.table.push_back(pv);
      if (pv.product > best.product) best = pv;
    }
  }

  if (best.product > 0.0 && options.refine_pairs > 0) {
    const auto locate = [&](double x) {
      return static_cast<std::size_t>(
          std::lower_bound(radii.begin(), radii.end(), x) - radii.begin());
    };
    const std::size_t i = locate(best.r1), j = locate(best.r2);
    const double a1 = radii[i == 0 ? 0 : i - 1];
    const double b1 = radii[std::min(i + 1, radii.size() - 1)];
    const double a2 = radii[j - 1];
    const double b2 = radii[std::min(j + 1, radii.size() - 1)];
    auto r1s = options.refine_pairs > 1
                   ? numerics::log_grid(a1, b1, options.refine_pairs)
                   : std::vector<double>{};
    auto r2s = options.refine_pairs > 1
                   ? numerics::log_grid(a2, b2, options.refine_pairs)
                   : std::vector<double>{};
    r1s.push_back(best.r1);
    r2s.push_back(best.r2);
    for (double r2 : r2s) {
      for (double r1 : r1s) {
        if (!(r1 < r2)) continue;
        const auto region = m_region(metric, r1, r2, options.hull);
        ++out.pairs_evaluated;
        if (!(region.value > 0.0)) continue;
        const double alpha = alpha_of(r1, r2);
        if (alpha * region.value > best.product) {
          best = {r1, r2, alpha, region.value, alpha * region.value};
          out.best_s = region.s;
        }
      }
    }
  }
  out.best = best;
  out.value = std::max(0.0, best.product);
  return out;
}

}  // namespace qlm
