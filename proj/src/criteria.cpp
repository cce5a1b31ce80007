#include "qlm/criteria.hpp"

#include <numbers>
#include <sstream>

#include "qlm/errors.hpp"
#include "qlm/quasimass.hpp"

namespace qlm {

namespace {

Verdict compare(std::string name, double lhs, double rhs, bool strict) {
  Verdict v;
  v.name = std::move(name);
  v.lhs = lhs;
  v.rhs = rhs;
  v.margin = lhs - rhs;
  v.satisfied = strict ? lhs > rhs : lhs >= rhs;
  return v;
}

void require_in_domain(const RadialMetric& metric, double r) {
  if (!metric.contains(r)) {
    std::ostringstream msg;
    msg << "r = " << r << " is outside the domain of " << metric.description();
    throw OutOfDomain(msg.str());
  }
}

double checked_boundary_curvature(const RadialMetric& metric, double r_out) {
  require_in_domain(metric, r_out);
  const double H = mean_curvature(metric, r_out);
  if (!(H > 0.0)) {
    std::ostringstream msg;
    msg << "boundary S_r with r = " << r_out << " has H = " << H << " <= 0";
    throw BoundaryNotMeanConvex(msg.str());
  }
  return H;
}

}  // namespace

bool CriteriaReport::any_satisfied() const {
  for (const auto& v : verdicts)
    if (v.satisfied) return true;
  return false;
}

CriteriaReport evaluate_criteria(const RadialMetric& metric, double r_out,
                                 const AlphaParams& params,
                                 const CriteriaOptions& options) {
  require_in_domain(metric, r_out);
  CriteriaReport rep;
  rep.r_out = r_out;
  rep.boundary_mean_curvature = mean_curvature(metric, r_out);
  rep.boundary_mean_convex = rep.boundary_mean_curvature > 0.0;
  if (options.require_mean_convex) checked_boundary_curvature(metric, r_out);

  rep.areal_radius = areal_radius(metric, r_out);
  rep.m_by_boundary = brown_york_radial(metric, r_out);
  rep.momega = m_omega(metric, r_out, params, options.momega);
  rep.m_omega_est = rep.momega.value;
  rep.two_R = 2.0 * rep.areal_radius;
  rep.intrinsic_diameter = std::numbers::pi * rep.areal_radius;
  rep.two_diam = 2.0 * rep.intrinsic_diameter;

  rep.verdicts.push_back(
      compare("brown_york", rep.m_omega_est, rep.m_by_boundary, true));
  rep.verdicts.push_back(compare("two_R", rep.m_omega_est, rep.two_R, false));
  rep.verdicts.push_back(compare("two_diam", rep.m_omega_est, rep.two_diam, false));
  return rep;
}

MinkowskiMargins minkowski_bound_check(const RadialMetric& metric, double r_out) {
  checked_boundary_curvature(metric, r_out);
  const double R = areal_radius(metric, r_out);
  const double m_by = brown_york_radial(metric, r_out);
  return {2.0 * R - m_by, R - m_by};
}

RoundSphereResult round_sphere_criterion(const RadialMetric& metric, double s,
                                         double r_out) {
  if (!(s < r_out)) throw OutOfDomain("round_sphere_criterion requires s < r_out");
  require_in_domain(metric, s);
  require_in_domain(metric, r_out);
  RoundSphereResult out;
  out.hawking = hawking_mass(metric, s);
  out.brown_york = brown_york_radial(metric, r_out);
  out.margin = out.hawking - out.brown_york;
  out.predicts_horizon = out.margin > 0.0;
  return out;
}

}  // namespace qlm
