#pragma once

// Reference computations that share no code with the library: composite
// Simpson rules and finite differences built only on metric.eval(r).u.

#include <cmath>
#include <functional>

#include "qlm/radial_metric.hpp"

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int n = 20000) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

/// Simpson in log r, for integrands spread over decades.
inline double simpson_log(const std::function<double(double)>& f, double a,
                          double b, int n = 20000) {
  return simpson([&](double x) { const double r = std::exp(x); return f(r) * r; },
                 std::log(a), std::log(b), n);
}

inline double radial_distance(const qlm::RadialMetric& g, double r1, double r2) {
  return simpson_log([&](double r) { const double u = g.eval(r).u; return u * u; },
                     r1, r2);
}

struct Sectional {
  double tangential, radial;
};

/// Warped product ds^2 + f(s)^2 dS^2 with f = u^2 r and ds = u^2 dr:
/// K_tan = (1 - f_s^2) / f^2 and K_rad = -f_ss / f. Derivatives in r are
/// five-point central differences of u alone.
inline Sectional sectional_fd(const qlm::RadialMetric& g, double r,
                              double rel_step = 1e-3) {
  const double h = rel_step * r;
  auto u = [&](double x) { return g.eval(x).u; };
  auto f = [&](double x) { const double v = u(x); return v * v * x; };
  auto d1 = [&](const std::function<double(double)>& F) {
    return (F(r - 2 * h) - 8 * F(r - h) + 8 * F(r + h) - F(r + 2 * h)) / (12 * h);
  };
  auto d2 = [&](const std::function<double(double)>& F) {
    return (-F(r - 2 * h) + 16 * F(r - h) - 30 * F(r) + 16 * F(r + h) -
            F(r + 2 * h)) / (12 * h * h);
  };
  const double U = u(r), U2 = U * U;
  const double fr = d1(f), frr = d2(f), ur = d1(u);
  const double fs = fr / U2;
  // d/ds = u^{-2} d/dr, so f_ss = u^{-2} d/dr (f_r u^{-2}).
  const double fss = (frr - 2.0 * fr * ur / U) / (U2 * U2);
  const double F = f(r);
  return {(1.0 - fs * fs) / (F * F), -fss / F};
}

}  // namespace oracle
