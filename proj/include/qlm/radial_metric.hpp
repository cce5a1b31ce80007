#pragma once

// Conformally flat, spherically symmetric metrics g = u^4(r) (dr^2 + r^2 dS^2)
// and the pointwise geometry of their centred coordinate spheres S_r.

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qlm/bridge.hpp"

namespace qlm {

/// u and its first two radial derivatives.
struct ProfileValue {
  double u = 0.0;
  double du = 0.0;
  double d2u = 0.0;
};

namespace segment {

/// u = a + b / r. Covers flat (1, 0), constants (c, 0) and Schwarzschild
/// tails in any rescaled coordinate.
struct Harmonic {
  double a = 1.0;
  double b = 0.0;
};

/// u = c + (1 + r^2/4)^{-1/2}: the round unit sphere under stereographic
/// projection, shifted by a constant.
struct SphereCap {
  double c = 0.0;
};

/// u' = q(r) / r^2 with q a monotone Hermite bridge, u(q.ra()) = u_start.
struct Bridged {
  HermiteBridge q;
  double u_start = 1.0;
};

}  // namespace segment

struct Segment {
  double lo = 0.0;  // open end
  double hi = 0.0;  // closed end
  std::variant<segment::Harmonic, segment::SphereCap, segment::Bridged> form;
};

/// Piecewise closed-form conformal factor on (r_min, r_max].
class RadialProfile {
 public:
  /// Segments must be contiguous and ordered. Throws InvalidProfile if u is
  /// not positive at the junctions or if u, u', u'' jump by more than the
  /// junction tolerance.
  explicit RadialProfile(std::vector<Segment> segments);

  ProfileValue eval(double r) const;

  double r_min() const { return segments_.front().lo; }
  double r_max() const { return segments_.back().hi; }
  bool contains(double r) const { return r > r_min() && r <= r_max(); }
  std::span<const Segment> segments() const { return segments_; }

  /// Largest relative jump of (u, u', u'') over all junctions.
  double max_junction_mismatch() const;

  static constexpr double kJunctionTolerance = 1e-9;

 private:
  const Segment& locate(double r) const;
  std::vector<Segment> segments_;
};

ProfileValue eval_segment(const Segment& seg, double r);

/// Closed form known to hold exactly on [start, r_max]:
/// u = scale * (1 + mass / (2 scale^2 r)).
struct AsymptoticTail {
  enum class Kind { flat, schwarzschild, none };
  Kind kind = Kind::none;
  double mass = 0.0;
  double scale = 1.0;
  double start = std::numeric_limits<double>::infinity();
};

const char* to_string(AsymptoticTail::Kind kind);

class RadialMetric {
 public:
  /// length_scale sets the default search window for infinite domains.
  /// Throws InvalidProfile if the declared tail disagrees with the profile
  /// beyond 1e-12 relative.
  RadialMetric(RadialProfile profile, AsymptoticTail tail,
               std::string description, double length_scale = 1.0);

  const RadialProfile& profile() const { return profile_; }
  const AsymptoticTail& tail() const { return tail_; }
  const std::string& description() const { return description_; }
  double length_scale() const { return length_scale_; }

  ProfileValue eval(double r) const { return profile_.eval(r); }
  bool contains(double r) const { return profile_.contains(r); }

  /// Finite window [lo, hi] inside the domain that contains every zero of
  /// the sphere mean curvature and everything of interest.
  std::pair<double, double> search_interval() const;

 private:
  RadialProfile profile_;
  AsymptoticTail tail_;
  std::string description_;
  double length_scale_;
};

ProfileValue eval_profile(const RadialProfile& profile, double r);

struct SphereReport {
  double r = 0.0;
  double area = 0.0;
  double areal_radius = 0.0;
  double mean_curvature = 0.0;
  double scalar_curvature = 0.0;
};

SphereReport sphere_geometry(const RadialMetric& metric, double r);

/// H of S_r with respect to the outward normal.
double mean_curvature(const RadialMetric& metric, double r);

/// u + 2 r u'; has the sign of the mean curvature.
double mean_curvature_sign_function(const RadialMetric& metric, double r);

double sphere_area(const RadialMetric& metric, double r);
double areal_radius(const RadialMetric& metric, double r);

/// -8 u^{-5} (u'' + 2u'/r).
double scalar_curvature(const RadialMetric& metric, double r);

struct SectionalCurvatures {
  double tangential = 0.0;  // plane tangent to S_r
  double radial = 0.0;      // plane containing the radial direction
};

SectionalCurvatures sectional_curvatures(const RadialMetric& metric, double r);

/// How a sectional-curvature bound k is turned into the constant K that
/// appears as sin(K tau) in the minimal-surface area estimate.
enum class CurvatureConvention {
  sqrt_bound,  // K = sqrt(k), units 1/length (default)
  bound,       // K = k
};

struct SectionalBoundOptions {
  int base_grid = 4096;  // per segment
  int refine_levels = 3;
  CurvatureConvention convention = CurvatureConvention::sqrt_bound;
};

/// Curvature constant K over [r1, r2]; see CurvatureConvention.
double sectional_bounds(const RadialMetric& metric, double r1, double r2,
                        const SectionalBoundOptions& options = {});

/// Largest |sectional curvature| over [r1, r2], without the convention.
double max_abs_sectional(const RadialMetric& metric, double r1, double r2,
                         const SectionalBoundOptions& options = {});

/// Minimum of area(S_s) over s in [a, b]: grid plus local refinement.
double min_sphere_area(const RadialMetric& metric, double a, double b,
                       int grid = 4096);

/// g-length of the radial segment from r1 to r2 (r1 may equal r_min when
/// u stays bounded there).
double radial_distance(const RadialMetric& metric, double r1, double r2,
                       double abs_tol = 1e-10);

}  // namespace qlm
