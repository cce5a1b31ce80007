#pragma once

// Run configuration for the command-line tool: a JSON document describing
// the metric, numerical settings, the alpha estimator and one section per
// command. Unknown keys are rejected and every error names its key.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlm/bridge.hpp"
#include "qlm/radial_metric.hpp"

namespace qlm {

enum class MetricKind { flat, schwarzschild, g1, g2 };

const char* to_string(MetricKind kind);

struct MetricConfig {
  MetricKind kind = MetricKind::flat;
  double m = 0.0;
  double rho0 = 0.0;  // g2 only
  double rho1 = 0.0;  // g2 only
  BridgeKind bridge = BridgeKind::quintic;
};

/// A radius given absolutely (`key`), as value * m (`key_times_m`) or as
/// value / m (`key_over_m`), so that configs follow the metric under sweeps.
struct Radius {
  enum class Scale { absolute, times_m, over_m };
  double value = 0.0;
  Scale scale = Scale::absolute;
  double resolve(double m) const {
    switch (scale) {
      case Scale::times_m: return value * m;
      case Scale::over_m: return value / m;
      default: return value;
    }
  }
  bool scaled() const { return scale != Scale::absolute; }
};

struct RadiusRange {
  Radius lo, hi;
  int n = 0;
  bool log_spacing = true;
};

struct NumericConfig {
  double quadrature_tol = 1e-10;
  double root_tol = 1e-12;
  int horizon_grid = 8192;
  int hull_grid = 2048;
  int curvature_grid = 4096;
  CurvatureConvention k_convention = CurvatureConvention::sqrt_bound;
};

struct AlphaConfig {
  double C = 1.0;
  std::optional<double> iota;  // unset means "auto"
};

struct MassesConfig {
  std::vector<Radius> radii;         // explicit list, or
  std::optional<RadiusRange> range;  // a generated range
};

struct HorizonsConfig {
  std::optional<Radius> r_lo, r_hi;
};

struct ImcfConfig {
  std::optional<Radius> r_start, r_end;
  int samples = 65;
};

struct MOmegaConfig {
  std::optional<Radius> r_out;
  int pairs = 64;
  double r_lo_factor = 1e-4;
  int refine_pairs = 9;
  bool table = false;
};

struct CriteriaConfig {
  std::optional<Radius> r_out;
  bool require_mean_convex = true;
  std::optional<Radius> round_sphere_s;
};

enum class SweepParameter { m, rho0, rho1, C, iota };

const char* to_string(SweepParameter p);

struct SweepConfig {
  std::string command;  // horizons, imcf, momega, criteria or masses
  SweepParameter parameter = SweepParameter::m;
  std::vector<double> values;
};

struct RunConfig {
  MetricConfig metric;
  NumericConfig numeric;
  AlphaConfig alpha;
  MassesConfig masses;
  HorizonsConfig horizons;
  ImcfConfig imcf;
  MOmegaConfig momega;
  CriteriaConfig criteria;
  std::optional<SweepConfig> sweep;
  std::uint64_t hash = 0;  // FNV-1a of the canonical input document
};

/// Throws ParseError for malformed JSON and ValidationError for unknown keys
/// or violated constraints.
RunConfig parse_config(const std::string& text);

/// Checks metric constraints and admissibility; throws ValidationError.
void validate_metric(const MetricConfig& metric, const std::string& where);

RadialMetric build_metric(const MetricConfig& metric);

/// Copy of config with one sweep parameter replaced.
RunConfig with_parameter(const RunConfig& config, SweepParameter p, double v);

std::string hash_hex(std::uint64_t hash);

}  // namespace qlm
