#include "qlm/radial_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qlm/errors.hpp"
#include "qlm/numerics.hpp"

namespace qlm {

namespace {

struct SegmentEvaluator {
  double r;

  ProfileValue operator()(const segment::Harmonic& h) const {
    return {h.a + h.b / r, -h.b / (r * r), 2.0 * h.b / (r * r * r)};
  }

  ProfileValue operator()(const segment::SphereCap& cap) const {
    const double w = 1.0 / std::sqrt(1.0 + 0.25 * r * r);
    const double w3 = w * w * w;
    return {cap.c + w, -0.25 * r * w3, -0.25 * w3 * w * w * (1.0 - 0.5 * r * r)};
  }

  ProfileValue operator()(const segment::Bridged& b) const {
    const auto& q = b.q;
    const double increment = numerics::gauss30(
        [&q](double t) { return q.value(t) / (t * t); }, q.ra(), r);
    const double qv = q.value(r);
    return {b.u_start + increment, qv / (r * r),
            q.slope(r) / (r * r) - 2.0 * qv / (r * r * r)};
  }
};

double relative_jump(double left, double right, double floor) {
  const double scale = std::max({std::abs(left), std::abs(right), floor});
  return std::abs(left - right) / scale;
}

}  // namespace

ProfileValue eval_segment(const Segment& seg, double r) {
  return std::visit(SegmentEvaluator{r}, seg.form);
}

RadialProfile::RadialProfile(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) throw InvalidProfile("profile has no segments");
  if (!(segments_.front().lo >= 0.0))
    throw InvalidProfile("profile domain must lie in r >= 0");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (!(s.hi > s.lo)) throw InvalidProfile("segment with empty interval");
    if (i > 0 && s.lo != segments_[i - 1].hi)
      throw InvalidProfile("segments are not contiguous");
    if (const auto* b = std::get_if<segment::Bridged>(&s.form)) {
      if (b->q.ra() != s.lo || b->q.rb() != s.hi)
        throw InvalidProfile("bridge interval does not match its segment");
    }
  }
  // u > 0 at every finite closed end; the builders check the interiors.
  for (const auto& seg : segments_) {
    if (!std::isfinite(seg.hi)) continue;
    if (!(eval_segment(seg, seg.hi).u > 0.0))
      throw InvalidProfile("u must be positive");
  }
  const double mismatch = max_junction_mismatch();
  if (mismatch > kJunctionTolerance) {
    std::ostringstream msg;
    msg << "profile is not C^2 across junctions (relative jump " << mismatch
        << ")";
    throw InvalidProfile(msg.str());
  }
}

double RadialProfile::max_junction_mismatch() const {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    const double x = segments_[i].hi;
    const auto l = eval_segment(segments_[i], x);
    const auto r = eval_segment(segments_[i + 1], x);
    const double u = std::max(std::abs(l.u), std::abs(r.u));
    worst = std::max(worst, relative_jump(l.u, r.u, 1e-300));
    worst = std::max(worst, relative_jump(l.du, r.du, 1e-12 * u / x));
    worst = std::max(worst, relative_jump(l.d2u, r.d2u, 1e-12 * u / (x * x)));
  }
  return worst;
}

const Segment& RadialProfile::locate(double r) const {
  if (!contains(r)) {
    std::ostringstream msg;
    msg << "radius " << r << " outside domain (" << r_min() << ", " << r_max()
        << "]";
    throw OutOfDomain(msg.str());
  }
  const auto it = std::lower_bound(
      segments_.begin(), segments_.end(), r,
      [](const Segment& s, double x) { return s.hi < x; });
  return *it;
}

ProfileValue RadialProfile::eval(double r) const {
  return eval_segment(locate(r), r);
}

ProfileValue eval_profile(const RadialProfile& profile, double r) {
  return profile.eval(r);
}

const char* to_string(AsymptoticTail::Kind kind) {
  switch (kind) {
    case AsymptoticTail::Kind::flat:
      return "flat";
    case AsymptoticTail::Kind::schwarzschild:
      return "schwarzschild";
    case AsymptoticTail::Kind::none:
      return "none";
  }
  return "unknown";
}

RadialMetric::RadialMetric(RadialProfile profile, AsymptoticTail tail,
                           std::string description, double length_scale)
    : profile_(std::move(profile)),
      tail_(tail),
      description_(std::move(description)),
      length_scale_(length_scale) {
  if (!(length_scale_ > 0.0))
    throw InvalidParams("length scale must be positive");
  if (tail_.kind == AsymptoticTail::Kind::none) return;
  if (tail_.kind == AsymptoticTail::Kind::flat) {
    tail_.mass = 0.0;
    tail_.scale = 1.0;
  }
  if (!(tail_.scale > 0.0)) throw InvalidParams("tail scale must be positive");
  const double from = std::max(tail_.start, profile_.r_min());
  const double to = std::isfinite(profile_.r_max())
                        ? profile_.r_max()
                        : std::max(from, 1.0) * 1e4;
  if (!(from <= to) || !std::isfinite(from))
    throw InvalidProfile("declared tail does not meet the domain");
  const double lo = from > 0.0 ? from : to * 1e-6;
  for (double r : numerics::radial_grid(lo, to, 64)) {
    if (!profile_.contains(r)) continue;
    const double closed =
        tail_.scale * (1.0 + tail_.mass / (2.0 * tail_.scale * tail_.scale * r));
    const double actual = profile_.eval(r).u;
    if (std::abs(actual - closed) > 1e-12 * std::abs(closed)) {
      std::ostringstream msg;
      msg << "profile deviates from its declared " << to_string(tail_.kind)
          << " tail at r = " << r;
      throw InvalidProfile(msg.str());
    }
  }
}

std::pair<double, double> RadialMetric::search_interval() const {
  const double rmin = profile_.r_min();
  const double lo = rmin > 0.0 ? rmin * (1.0 + 1e-9) : 1e-6 * length_scale_;
  if (std::isfinite(profile_.r_max())) return {lo, profile_.r_max()};
  double reach = length_scale_;
  if (tail_.kind != AsymptoticTail::Kind::none) {
    if (std::isfinite(tail_.start)) reach = std::max(reach, tail_.start);
    reach = std::max(reach,
                     tail_.mass / (2.0 * tail_.scale * tail_.scale));
  }
  return {lo, 8.0 * reach};
}

double mean_curvature_sign_function(const RadialMetric& metric, double r) {
  const auto v = metric.eval(r);
  return v.u + 2.0 * r * v.du;
}

double mean_curvature(const RadialMetric& metric, double r) {
  const auto v = metric.eval(r);
  return 2.0 * (v.u + 2.0 * r * v.du) / (r * v.u * v.u * v.u);
}

double sphere_area(const RadialMetric& metric, double r) {
  const double u = metric.eval(r).u;
  const double u2 = u * u;
  return 4.0 * std::numbers::pi * r * r * u2 * u2;
}

double areal_radius(const RadialMetric& metric, double r) {
  const double u = metric.eval(r).u;
  return u * u * r;
}

double scalar_curvature(const RadialMetric& metric, double r) {
  const auto v = metric.eval(r);
  const double u2 = v.u * v.u;
  return -8.0 * (v.d2u + 2.0 * v.du / r) / (u2 * u2 * v.u);
}

SphereReport sphere_geometry(const RadialMetric& metric, double r) {
  const auto v = metric.eval(r);
  const double u2 = v.u * v.u;
  SphereReport rep;
  rep.r = r;
  rep.areal_radius = u2 * r;
  rep.area = 4.0 * std::numbers::pi * rep.areal_radius * rep.areal_radius;
  rep.mean_curvature = 2.0 * (v.u + 2.0 * r * v.du) / (r * u2 * v.u);
  rep.scalar_curvature = -8.0 * (v.d2u + 2.0 * v.du / r) / (u2 * u2 * v.u);
  return rep;
}

SectionalCurvatures sectional_curvatures(const RadialMetric& metric,
                                         double r) {
  // g = e^{2 phi} delta with phi = 2 ln u.
  const auto v = metric.eval(r);
  const double p = v.du / v.u;  // phi' / 2
  const double inv_u4 = 1.0 / (v.u * v.u * v.u * v.u);
  SectionalCurvatures k;
  k.tangential = inv_u4 * (-4.0 * p / r - 4.0 * p * p);
  k.radial = inv_u4 * (-2.0 * v.d2u / v.u + 2.0 * p * p - 2.0 * p / r);
  return k;
}

double max_abs_sectional(const RadialMetric& metric, double r1, double r2,
                         const SectionalBoundOptions& options) {
  if (!(r1 < r2)) throw OutOfDomain("sectional_bounds requires r1 < r2");
  if (!metric.contains(r1) || !metric.contains(r2))
    throw OutOfDomain("sectional_bounds: interval outside domain");
  auto k_at = [&](double r) {
    const auto k = sectional_curvatures(metric, r);
    return std::max(std::abs(k.tangential), std::abs(k.radial));
  };
  double best = 0.0;
  for (const auto& seg : metric.profile().segments()) {
    const double a = std::max(seg.lo, r1);
    const double b = std::min(seg.hi, r2);
    if (!(a < b)) continue;
    const auto grid = numerics::radial_grid(a, b, options.base_grid);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = k_at(grid[i]);
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i) {
      best = std::max(best, vals[i]);
      const bool left_ok = i == 0 || vals[i] > vals[i - 1];
      const bool right_ok = i + 1 == n || vals[i] >= vals[i + 1];
      if (!(left_ok && right_ok)) continue;
      double x = grid[i], fx = vals[i];
      double hl = i == 0 ? 0.0 : grid[i] - grid[i - 1];
      double hr = i + 1 == n ? 0.0 : grid[i + 1] - grid[i];
      for (int level = 0; level < options.refine_levels; ++level) {
        hl *= 0.5;
        hr *= 0.5;
        if (hl > 0.0) {
          const double f = k_at(x - hl);
          if (f > fx) {
            fx = f;
            x -= hl;
            continue;
          }
        }
        if (hr > 0.0) {
          const double f = k_at(x + hr);
          if (f > fx) {
            fx = f;
            x += hr;
          }
        }
      }
      best = std::max(best, fx);
    }
  }
  return best;
}

double sectional_bounds(const RadialMetric& metric, double r1, double r2,
                        const SectionalBoundOptions& options) {
  const double k = max_abs_sectional(metric, r1, r2, options);
  return options.convention == CurvatureConvention::sqrt_bound ? std::sqrt(k)
                                                               : k;
}

double min_sphere_area(const RadialMetric& metric, double a, double b,
                       int grid) {
  if (!(a <= b)) throw OutOfDomain("min_sphere_area requires a <= b");
  if (a == b) return sphere_area(metric, a);
  const auto radii = numerics::radial_grid(a, b, grid);
  std::size_t arg = 0;
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double area = sphere_area(metric, radii[i]);
    if (area < lowest) {
      lowest = area;
      arg = i;
    }
  }
  if (arg > 0 && arg + 1 < radii.size()) {
    const double x = numerics::maximise(
        [&](double r) { return -sphere_area(metric, r); }, radii[arg - 1],
        radii[arg + 1]);
    lowest = std::min(lowest, sphere_area(metric, x));
  }
  return lowest;
}

double radial_distance(const RadialMetric& metric, double r1, double r2,
                       double abs_tol) {
  const auto& prof = metric.profile();
  if (!(r1 <= r2)) throw OutOfDomain("radial_distance requires r1 <= r2");
  if (r1 < prof.r_min() || r2 > prof.r_max() ||
      (r1 == prof.r_min() && r1 == r2))
    throw OutOfDomain("radial_distance: interval outside domain");
  if (r1 == prof.r_min() && r1 == 0.0) {
    const auto* h = std::get_if<segment::Harmonic>(&prof.segments().front().form);
    if (h != nullptr && h->b != 0.0)
      throw OutOfDomain("radial distance to r = 0 is infinite for this metric");
  }
  double total = 0.0;
  const auto segs = prof.segments();
  const double tol = abs_tol / static_cast<double>(segs.size());
  for (const auto& seg : segs) {
    const double a = std::max(seg.lo, r1);
    const double b = std::min(seg.hi, r2);
    if (!(a < b)) continue;
    if (a > 0.0 && b > 10.0 * a) {
      // Wide intervals are integrated in log r, where 1/r tails are smooth.
      total += numerics::integrate(
          [&seg](double x) {
            const double r = std::exp(x);
            const double u = eval_segment(seg, r).u;
            return u * u * r;
          },
          std::log(a), std::log(b), tol);
    } else {
      total += numerics::integrate(
          [&seg](double r) {
            const double u = eval_segment(seg, r).u;
            return u * u;
          },
          a, b, tol);
    }
  }
  return total;
}

}  // namespace qlm
