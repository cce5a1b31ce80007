#include "qlm/quasimass.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "qlm/errors.hpp"
#include "qlm/numerics.hpp"

namespace qlm {

double hawking_mass(const RadialMetric& metric, double r) {
  const auto v = metric.eval(r);
  const double R = v.u * v.u * r;
  // R H / 2 = 1 + 2x with x = r u'/u; 1 - (1 + 2x)^2 = -4x(1 + x).
  const double x = r * v.du / v.u;
  return -2.0 * R * x * (1.0 + x);
}

double brown_york_radial(const RadialMetric& metric, double r) {
  const auto v = metric.eval(r);
  return -2.0 * r * r * v.u * v.du;
}

double brown_york_from_curvature(const RadialMetric& metric, double r) {
  const auto s = sphere_geometry(metric, r);
  return s.areal_radius -
         0.5 * s.areal_radius * s.areal_radius * s.mean_curvature;
}

MassSummary mass_summary(const RadialMetric& metric, double r) {
  return {r, hawking_mass(metric, r), brown_york_radial(metric, r),
          areal_radius(metric, r)};
}

double adm_mass(const RadialMetric& metric, const AdmFitOptions& options) {
  using Kind = AsymptoticTail::Kind;
  switch (metric.tail().kind) {
    case Kind::flat:
      return 0.0;
    case Kind::schwarzschild:
      return metric.tail().mass;
    case Kind::none:
      break;
  }
  const double r_max = metric.profile().r_max();
  if (!std::isfinite(r_max))
    throw NotAsymptoticallyFlat(
        "untagged metric on an unbounded domain: no fit window");
  const auto radii = numerics::log_grid(r_max / 10.0, r_max, options.samples);
  const auto n = static_cast<Eigen::Index>(radii.size());
  Eigen::MatrixXd basis(n, 2);
  Eigen::VectorXd u(n), by(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double r = radii[static_cast<std::size_t>(i)];
    basis(i, 0) = 1.0;
    basis(i, 1) = 1.0 / r;
    u(i) = metric.eval(r).u;
    by(i) = brown_york_radial(metric, r);
  }
  const auto qr = basis.colPivHouseholderQr();
  const Eigen::Vector2d fit = qr.solve(u);
  if (std::abs(fit(0) - 1.0) > options.flatness_tol) {
    std::ostringstream msg;
    msg << "u does not tend to 1 (fitted asymptote " << fit(0) << ")";
    throw NotAsymptoticallyFlat(msg.str());
  }
  const double mass = 2.0 * fit(1);
  // m_BY(S_r) = 2ab + 2b^2/r on an exact tail; its 1/r -> 0 limit is 2b.
  const Eigen::Vector2d by_fit = qr.solve(by);
  if (std::abs(by_fit(0) - mass) >
      options.consistency_tol * std::max(1.0, std::abs(mass))) {
    std::ostringstream msg;
    msg << "ADM fit " << mass << " disagrees with Brown-York limit "
        << by_fit(0);
    throw NotAsymptoticallyFlat(msg.str());
  }
  return mass;
}

double torus_hawking_mass(double r_cyl, double l) {
  if (!(r_cyl > 0.0) || !(l > 0.0) || !std::isfinite(r_cyl) ||
      !std::isfinite(l))
    throw InvalidParams("torus requires r > 0 and l > 0");
  // Written with (8r - l) so the sign is exact at l = 8r.
  return std::sqrt(r_cyl * l / 8.0) * ((8.0 * r_cyl - l) / (8.0 * r_cyl));
}

}  // namespace qlm
