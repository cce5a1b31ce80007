#include "qlm/numerics.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "qlm/errors.hpp"

namespace qlm::numerics {

std::vector<double> linear_grid(double lo, double hi, int n) {
  if (n < 2) throw InvalidParams("grid needs at least two points");
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = lo + step * i;
  grid.back() = hi;
  return grid;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 2) throw InvalidParams("grid needs at least two points");
  if (!(lo > 0.0)) throw InvalidParams("log grid needs a positive start");
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i)
    grid[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> radial_grid(double lo, double hi, int n) {
  if (lo > 0.0 && hi / lo > 10.0) return log_grid(lo, hi, n);
  return linear_grid(lo, hi, n);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (a == b) return 0.0;
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  // Boost's tolerance is relative to the L1 norm; convert the absolute
  // request using a single-panel estimate. Asking for much less than
  // 1e-13 only chases roundoff and makes the recursion explode.
  double l1 = 0.0;
  Rule::integrate(f, a, b, 0, 0.0, nullptr, &l1);
  const double rel = l1 > 0.0 ? std::max(1e-13, abs_tol / l1) : 1e-13;
  double error = 0.0;
  const double value = Rule::integrate(f, a, b, 15, rel, &error);
  if (!std::isfinite(value))
    throw Error("quadrature produced a non-finite value");
  if (error > abs_tol && error > 1e-11 * l1) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", error);
    throw Error(std::string("quadrature failed to reach tolerance: error estimate ") + buf);
  }
  return value;
}

double gauss30(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double rel_tol) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw Error("bisect_root: interval does not bracket a sign change");
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    // Keep going to full precision; rel_tol only bounds the minimum effort.
    if (hi - lo <= 0.25 * rel_tol * std::abs(hi) &&
        hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi))
      break;
  }
  // Pick the endpoint with the smaller residual.
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

double maximise(const std::function<double(double)>& f, double lo, double hi) {
  const auto result = boost::math::tools::brent_find_minima(
      [&](double x) { return -f(x); }, lo, hi,
      std::numeric_limits<double>::digits / 2);
  return result.first;
}

}  // namespace qlm::numerics
