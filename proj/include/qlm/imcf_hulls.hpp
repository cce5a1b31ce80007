#pragma once

// Inverse mean curvature flow of centred spheres, radial minimizing-hull
// checks, and the lower mass estimate m(Omega) built from the Hawking mass
// of minimizing hulls weighted by the minimal-surface area coefficient alpha.

#include <optional>
#include <string>
#include <vector>

#include "qlm/radial_metric.hpp"

namespace qlm {

struct ImcfSample {
  double t = 0.0;  // flow time, 2 ln(R / R0)
  double r = 0.0;
  double areal_radius = 0.0;
  double area = 0.0;
  double hawking = 0.0;
};

struct ImcfTrace {
  std::vector<ImcfSample> samples;
};

/// In spherical symmetry the centred spheres are the flow surfaces, so the
/// trace is sampled uniformly in t by inverting R(r) = R0 e^{t/2}. Throws
/// FlowObstruction if H <= 0 somewhere on [r_start, r_end].
ImcfTrace imcf_trace(const RadialMetric& metric, double r_start, double r_end,
                     int n);

/// Minimum forward-difference slope dm_H/dt along the trace.
double geroch_report(const ImcfTrace& trace);

/// H(s) >= 0 and area(S_sigma) >= area(S_s) for all sigma in [s, r2]. Only
/// radial competitors are considered.
bool radial_hull_check(const RadialMetric& metric, double s, double r2);

struct AlphaParams {
  double C = 1.0;               // area-estimate constant
  std::optional<double> iota;   // injectivity radius; heuristic if unset
  SectionalBoundOptions curvature;
  double distance_tol = 1e-10;  // absolute, for the radial distance d
};

struct AlphaResult {
  double alpha = 0.0;
  double alpha_squared = 0.0;
  double distance = 0.0;       // d between S_r1 and S_r2
  double region_outer = 0.0;   // sigma* with dist(sigma*, r2) = d/4
  double curvature = 0.0;      // K
  double iota = 0.0;
  bool iota_heuristic = false;
  double ball_radius = 0.0;    // min(d/2, iota)
  double area_estimate = 0.0;  // C K^{-2} int_0^r tau^{-1} sin^2(K tau)
  double inner_area = 0.0;     // area(S_r1)
};

/// K^{-2} int_0^r tau^{-1} sin^2(K tau) dtau; r^2/2 at K = 0.
double sine_area_integral(double K, double r);

AlphaResult alpha_coefficient(const RadialMetric& metric, double r1, double r2,
                              const AlphaParams& params);

struct HullOptions {
  int grid = 2048;
  bool refine = true;
};

struct RegionMass {
  double value = 0.0;   // >= 0
  double s = 0.0;       // maximising hull radius (0 if none beat the limit)
  bool found = false;   // some hull with positive Hawking mass
};

/// sup of m_H(S_s) over s <= r1 with S_s passing radial_hull_check(s, r2).
/// Small centred spheres are hulls with m_H -> 0, so the result is >= 0.
RegionMass m_region(const RadialMetric& metric, double r1, double r2,
                    const HullOptions& options = {});

struct MOmegaOptions {
  int pairs = 64;             // log-spaced radii per axis
  double r_lo_factor = 1e-4;  // smallest radius as a fraction of r_out
  int refine_pairs = 9;       // per axis around the argmax, 0 disables
  HullOptions hull;
};

struct PairValue {
  double r1 = 0.0;
  double r2 = 0.0;
  double alpha = 0.0;
  double region_mass = 0.0;
  double product = 0.0;
};

struct MOmegaResult {
  double value = 0.0;
  PairValue best;
  double best_s = 0.0;
  int pairs_evaluated = 0;
  std::vector<PairValue> table;  // grid stage, row-major over (r2, r1)
  // Provenance.
  double C = 1.0;
  std::optional<double> iota;
  CurvatureConvention convention = CurvatureConvention::sqrt_bound;
  MOmegaOptions options;
};

MOmegaResult m_omega(const RadialMetric& metric, double r_out,
                     const AlphaParams& params, const MOmegaOptions& options = {});

}  // namespace qlm
