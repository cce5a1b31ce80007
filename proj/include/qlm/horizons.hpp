#pragma once

// Centred minimal spheres. Only coordinate spheres S_r are candidates; the
// outermost and outer-minimizing flags are exact within that class.

#include <vector>

#include "qlm/radial_metric.hpp"

namespace qlm {

enum class HorizonKind {
  neck,   // H changes from - to +: local minimum of area
  bulge,  // H changes from + to -: local maximum of area
};

const char* to_string(HorizonKind kind);

struct HorizonRecord {
  double r = 0.0;
  double areal_radius = 0.0;
  double area = 0.0;
  HorizonKind kind = HorizonKind::neck;
  bool outermost = false;
  bool outer_minimizing = false;
};

struct HorizonSearchOptions {
  int grid = 8192;
  double root_rel_tol = 1e-12;
  double grazing_tol = 1e-10;
};

struct HorizonSearch {
  double r_lo = 0.0;
  double r_hi = 0.0;
  std::vector<HorizonRecord> horizons;  // sorted by r
  std::vector<double> grazing;          // |H| tiny without a sign change
  double min_mean_curvature = 0.0;      // over the grid
};

HorizonSearch find_horizons(const RadialMetric& metric, double r_lo,
                            double r_hi, const HorizonSearchOptions& options = {});

/// Search over metric.search_interval().
HorizonSearch find_horizons(const RadialMetric& metric,
                            const HorizonSearchOptions& options = {});

/// True iff area(S_s) >= area(S_r) for every s in [record.r, r_max]
/// (radial competitors only).
bool outer_minimizing_check(const RadialMetric& metric,
                            const HorizonRecord& record, double r_max);

struct PenroseReport {
  double deficit = 0.0;  // m_ADM - sqrt(A / 16 pi)
  double adm_mass = 0.0;
  double horizon_r = 0.0;
  double horizon_area = 0.0;
};

/// Throws NoHorizon when the metric has no centred minimal sphere.
PenroseReport penrose_report(const RadialMetric& metric);
double penrose_check(const RadialMetric& metric);

}  // namespace qlm
