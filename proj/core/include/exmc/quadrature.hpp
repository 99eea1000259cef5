#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace exmc {

/// Adaptive Gauss-Kronrod panels. Integration fails with QuadratureError
/// when the estimated error exceeds max(abs_tol, rel_tol * L1).
struct QuadratureRule {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  unsigned max_depth = 20;
};

/// Integrates f over [a, b]; either end may be infinite. `breakpoints`
/// (any order, out-of-range values ignored) split the range at kinks.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureRule& rule = {},
                 std::span<const double> breakpoints = {});

/// Sign changes of g on [lo, hi], located by scanning then bisecting.
/// Found by a dense linear scan plus a geometric scan near `lo`.
std::vector<double> find_roots(const std::function<double(double)>& g,
                               double lo, double hi,
                               std::size_t scan_points = 2001);

}  // namespace exmc
