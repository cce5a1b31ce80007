#include "qlm/horizons.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qlm/errors.hpp"
#include "qlm/numerics.hpp"
#include "qlm/quasimass.hpp"

namespace qlm {

const char* to_string(HorizonKind kind) {
  switch (kind) {
    case HorizonKind::neck:
      return "neck";
    case HorizonKind::bulge:
      return "bulge";
  }
  return "unknown";
}

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

bool has_sign_change(const RadialMetric& metric, double lo, double hi,
                     int grid) {
  if (!(lo < hi)) return false;
  const auto radii = numerics::radial_grid(lo, hi, grid);
  int prev = 0;
  for (double r : radii) {
    const int s = sign_of(mean_curvature_sign_function(metric, r));
    if (s != 0 && prev != 0 && s != prev) return true;
    if (s != 0) prev = s;
  }
  return false;
}

HorizonRecord make_record(const RadialMetric& metric, double r,
                          HorizonKind kind) {
  HorizonRecord rec;
  rec.r = r;
  rec.kind = kind;
  rec.areal_radius = areal_radius(metric, r);
  rec.area = 4.0 * std::numbers::pi * rec.areal_radius * rec.areal_radius;
  return rec;
}

}  // namespace

HorizonSearch find_horizons(const RadialMetric& metric, double r_lo,
                            double r_hi, const HorizonSearchOptions& options) {
  if (!(r_lo < r_hi)) throw OutOfDomain("find_horizons requires r_lo < r_hi");
  if (!metric.contains(r_lo) || !metric.contains(r_hi))
    throw OutOfDomain("find_horizons: search interval outside domain");

  HorizonSearch out;
  out.r_lo = r_lo;
  out.r_hi = r_hi;
  const auto radii = numerics::radial_grid(r_lo, r_hi, options.grid);
  std::vector<double> f(radii.size());
  out.min_mean_curvature = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    f[i] = mean_curvature_sign_function(metric, radii[i]);
    out.min_mean_curvature =
        std::min(out.min_mean_curvature, mean_curvature(metric, radii[i]));
  }

  auto sign_fn = [&metric](double r) {
    return mean_curvature_sign_function(metric, r);
  };
  std::vector<bool> near_root(radii.size(), false);
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    const int a = sign_of(f[i]);
    const int b = sign_of(f[i + 1]);
    if (a == 0 || b == 0 || a == b) continue;
    const double root =
        numerics::bisect_root(sign_fn, radii[i], radii[i + 1], options.root_rel_tol);
    out.horizons.push_back(
        make_record(metric, root, a < 0 ? HorizonKind::neck : HorizonKind::bulge));
    near_root[i] = near_root[i + 1] = true;
  }
  // Exact zeros on grid points.
  for (std::size_t i = 1; i + 1 < radii.size(); ++i) {
    if (f[i] != 0.0) continue;
    const int a = sign_of(f[i - 1]);
    const int b = sign_of(f[i + 1]);
    if (a != 0 && b != 0 && a != b) {
      out.horizons.push_back(make_record(
          metric, radii[i], a < 0 ? HorizonKind::neck : HorizonKind::bulge));
      near_root[i - 1] = near_root[i] = near_root[i + 1] = true;
    }
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (near_root[i]) continue;
    if (std::abs(mean_curvature(metric, radii[i])) < options.grazing_tol)
      out.grazing.push_back(radii[i]);
  }
  std::sort(out.horizons.begin(), out.horizons.end(),
            [](const auto& x, const auto& y) { return x.r < y.r; });

  if (!out.horizons.empty()) {
    const double domain_hi = metric.search_interval().second;
    const bool more_outside =
        r_hi < domain_hi && has_sign_change(metric, r_hi, domain_hi, options.grid);
    out.horizons.back().outermost = !more_outside;
  }
  for (auto& rec : out.horizons)
    rec.outer_minimizing = outer_minimizing_check(metric, rec, r_hi);
  return out;
}

HorizonSearch find_horizons(const RadialMetric& metric,
                            const HorizonSearchOptions& options) {
  const auto [lo, hi] = metric.search_interval();
  return find_horizons(metric, lo, hi, options);
}

bool outer_minimizing_check(const RadialMetric& metric,
                            const HorizonRecord& record, double r_max) {
  if (!(r_max > record.r)) return true;
  const double reference = sphere_area(metric, record.r);
  const double tol = 1e-10 * std::max(1.0, reference);
  return min_sphere_area(metric, record.r, r_max) >= reference - tol;
}

PenroseReport penrose_report(const RadialMetric& metric) {
  const auto search = find_horizons(metric);
  if (search.horizons.empty())
    throw NoHorizon("no centred minimal sphere in " + metric.description());
  const auto& outer = search.horizons.back();
  PenroseReport rep;
  rep.adm_mass = adm_mass(metric);
  rep.horizon_r = outer.r;
  rep.horizon_area = outer.area;
  rep.deficit = rep.adm_mass - std::sqrt(outer.area / (16.0 * std::numbers::pi));
  return rep;
}

double penrose_check(const RadialMetric& metric) {
  return penrose_report(metric).deficit;
}

}  // namespace qlm
