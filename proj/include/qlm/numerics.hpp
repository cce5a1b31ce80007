#pragma once

#include <functional>
#include <vector>

namespace qlm::numerics {

/// n points from lo to hi inclusive, uniform in r.
std::vector<double> linear_grid(double lo, double hi, int n);

/// n points from lo to hi inclusive, uniform in log r. Requires lo > 0.
std::vector<double> log_grid(double lo, double hi, int n);

/// Log spacing when the interval spans more than a decade, linear otherwise.
std::vector<double> radial_grid(double lo, double hi, int n);

/// Adaptive Gauss-Kronrod integral of f over [a, b]. Throws if the error
/// estimate stays above abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

/// Fixed 30-point Gauss-Legendre rule; used for pointwise evaluation of
/// smooth integrands whose singularities lie far from [a, b].
double gauss30(const std::function<double(double)>& f, double a, double b);

/// Bisection to full double precision on a bracket with f(lo) f(hi) <= 0.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double rel_tol);

/// Golden-section style maximisation on [lo, hi]; returns the argmax.
double maximise(const std::function<double(double)>& f, double lo, double hi);

}  // namespace qlm::numerics
