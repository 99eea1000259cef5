#include "exmc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "exmc/errors.hpp"

namespace exmc {

namespace {

double integrate_piece(const std::function<double(double)>& f, double a, double b,
                       const QuadratureRule& rule) {
  if (a == b) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, rule.max_depth, rule.rel_tol, &error, &l1);
  if (!std::isfinite(value) || error > std::max(rule.abs_tol, rule.rel_tol * l1)) {
    std::ostringstream msg;
    msg << "quadrature did not converge on [" << a << ", " << b << "]: estimate " << value
        << ", error " << error;
    throw QuadratureError(msg.str());
  }
  return value;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureRule& rule, std::span<const double> breakpoints) {
  if (a > b) return -integrate(f, b, a, rule, breakpoints);
  std::vector<double> cuts{a};
  for (double c : breakpoints) {
    if (c > a && c < b && std::isfinite(c)) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin() + 1, cuts.end() - 1);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += integrate_piece(f, cuts[i], cuts[i + 1], rule);
  }
  return total;
}

std::vector<double> find_roots(const std::function<double(double)>& g, double lo,
                               double hi, std::size_t scan_points) {
  std::vector<double> xs;
  xs.reserve(2 * scan_points);
  const double span = hi - lo;
  for (std::size_t i = 0; i < scan_points; ++i) {
    xs.push_back(lo + span * static_cast<double>(i) / static_cast<double>(scan_points - 1));
  }
  // Geometric offsets resolve crossings that sit very close to `lo`.
  for (double off = span * 1e-12; off < span; off *= 1.5) xs.push_back(lo + off);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<double> roots;
  double x_prev = xs.front();
  double g_prev = g(x_prev);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double x = xs[i];
    const double gx = g(x);
    if (std::isfinite(g_prev) && std::isfinite(gx) && ((g_prev < 0.0) != (gx < 0.0))) {
      double left = x_prev;
      double right = x;
      double g_left = g_prev;
      for (int it = 0; it < 200 && right - left > 4 * std::numeric_limits<double>::epsilon() *
                                                      std::max(1.0, std::abs(left));
           ++it) {
        const double mid = 0.5 * (left + right);
        const double gm = g(mid);
        if ((gm < 0.0) == (g_left < 0.0)) {
          left = mid;
          g_left = gm;
        } else {
          right = mid;
        }
      }
      roots.push_back(0.5 * (left + right));
    }
    x_prev = x;
    g_prev = gx;
  }
  return roots;
}

}  // namespace exmc
