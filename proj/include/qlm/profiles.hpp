#pragma once

// Explicit metrics: flat space, Schwarzschild, the horizon-free metric g2
// (Schwarzschild outside, flat inside, no centred minimal sphere) and the
// glued metric g1 (round sphere cap joined to a rescaled Schwarzschild end).

#include "qlm/bridge.hpp"
#include "qlm/radial_metric.hpp"

namespace qlm {

struct G2Params {
  double m = 1.0;
  double rho0 = 2.0;  // h vanishes on (0, rho0]
  double rho1 = 3.0;  // h = -m/2 on [rho1, inf)
  BridgeKind bridge = BridgeKind::quintic;
};

struct G1Params {
  double m = 0.05;
  BridgeKind bridge = BridgeKind::quintic;
};

/// Derived constants of the g1 gluing for a given mass.
struct G1Construction {
  double m = 0.0;
  double epsilon = 0.0;         // m^2 / 64
  double rho0 = 0.0;            // 1 / (4m)
  double k_rho0 = 0.0;          // -32 m^2 / (1 + 64 m^2)^{3/2}
  double k_2rho0 = 0.0;         // -16 m^2
  double bridge_integral = 0.0; // integral of k over [rho0, 2 rho0]
  double b0 = 0.0;              // u_m(0)
  double horizon_radius = 0.0;  // m / (2 epsilon) = 32 / m
  HermiteBridge q;              // rho^2 k on [rho0, 2 rho0]
};

RadialMetric build_flat();

/// u = 1 + m / (2r) on (0, inf). m = 0 gives the flat metric.
RadialMetric build_schwarzschild(double m);

/// Throws InvalidParams unless rho1 > rho0 > m > 0.
RadialMetric build_g2(const G2Params& params);

/// Throws InvalidParams if the gluing is not admissible for this m.
RadialMetric build_g1(const G1Params& params);

G1Construction g1_construction(const G1Params& params);

/// Value of u on the inner flat region r <= rho0 of g2.
double g2_inner_value(const G2Params& params);

/// Monotone nonincreasing Hermite bridge from (ra, fa) to (rb, fb) with end
/// slopes sa, sb <= 0. Throws NonMonotoneBridge if the interpolant has a
/// positive derivative anywhere on [ra, rb].
HermiteBridge smooth_monotone_bridge(double ra, double rb, double fa, double fb,
                                     double sa, double sb,
                                     BridgeKind kind = BridgeKind::quintic);

}  // namespace qlm
