#pragma once

// Sufficient conditions for a horizon inside a mean-convex domain bounded
// by a centred sphere S_{r_out}, all driven by the lower mass estimate
// m(Omega).

#include <string>
#include <vector>

#include "qlm/imcf_hulls.hpp"

namespace qlm {

struct Verdict {
  std::string name;
  bool satisfied = false;
  double lhs = 0.0;     // m(Omega) estimate
  double rhs = 0.0;     // compared quantity
  double margin = 0.0;  // lhs - rhs
};

struct CriteriaOptions {
  MOmegaOptions momega;
  /// When false a boundary with H <= 0 is evaluated anyway and reported with
  /// boundary_mean_convex = false instead of raising BoundaryNotMeanConvex.
  bool require_mean_convex = true;
};

struct CriteriaReport {
  double r_out = 0.0;
  double boundary_mean_curvature = 0.0;
  bool boundary_mean_convex = true;
  double areal_radius = 0.0;
  double m_by_boundary = 0.0;
  double m_omega_est = 0.0;
  double two_R = 0.0;               // circumscribed radius of a round sphere
  double intrinsic_diameter = 0.0;  // pi R
  double two_diam = 0.0;            // 2 pi R
  std::vector<Verdict> verdicts;    // (a) brown_york, (b) two_R, (c) two_diam
  MOmegaResult momega;              // carries C, iota, grids
  bool any_satisfied() const;
};

CriteriaReport evaluate_criteria(const RadialMetric& metric, double r_out,
                                 const AlphaParams& params,
                                 const CriteriaOptions& options = {});

struct MinkowskiMargins {
  double two_R_margin = 0.0;  // 2R - m_BY
  double R_margin = 0.0;      // R - m_BY, the sharp form for round spheres
};

/// Throws BoundaryNotMeanConvex if H(r_out) <= 0.
MinkowskiMargins minkowski_bound_check(const RadialMetric& metric, double r_out);

struct RoundSphereResult {
  double margin = 0.0;  // m_H(S_s) - m_BY(S_{r_out})
  double hawking = 0.0;
  double brown_york = 0.0;
  bool predicts_horizon = false;
  /// Always true: isoperimetry of S_s is assumed, never verified.
  bool isoperimetry_assumed = true;
};

RoundSphereResult round_sphere_criterion(const RadialMetric& metric, double s,
                                         double r_out);

}  // namespace qlm
