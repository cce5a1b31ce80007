#pragma once

// Quasi-local masses of centred spheres, the ADM mass, and the Hawking mass
// of the flat solid torus. Geometric units, G = c = 1.

#include "qlm/radial_metric.hpp"

namespace qlm {

struct MassSummary {
  double r = 0.0;
  double hawking = 0.0;
  double brown_york = 0.0;
  double areal_radius = 0.0;
};

/// sqrt(|S|/16 pi) (1 - (1/16 pi) int H^2) for S = S_r. H is constant on
/// S_r, so this reduces to (R/2)(1 - (R H / 2)^2).
double hawking_mass(const RadialMetric& metric, double r);

/// Brown-York mass of S_r. The induced metric is round, so the reference
/// embedding is the Euclidean sphere of radius R and H0 = 2/R:
/// m_BY = R - R^2 H / 2 = -2 r^2 u u'.
double brown_york_radial(const RadialMetric& metric, double r);

/// R - R^2 H / 2 evaluated literally; agrees with brown_york_radial.
double brown_york_from_curvature(const RadialMetric& metric, double r);

MassSummary mass_summary(const RadialMetric& metric, double r);

struct AdmFitOptions {
  int samples = 256;
  double flatness_tol = 1e-8;
  double consistency_tol = 1e-6;
};

/// Tail parameter for tagged metrics; otherwise a least-squares fit of
/// u ~ a + b / r over [r_max/10, r_max]. Throws NotAsymptoticallyFlat when
/// |a - 1| is too large or the fit disagrees with the Brown-York limit.
double adm_mass(const RadialMetric& metric, const AdmFitOptions& options = {});

/// Hawking mass of the boundary torus of the flat cylinder of radius r_cyl
/// and height l with ends identified: sqrt(r l / 8) (1 - l / (8 r)).
double torus_hawking_mass(double r_cyl, double l);

}  // namespace qlm
