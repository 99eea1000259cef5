#include "exmc/sample_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace exmc {

double sample_space_total(const UnnormalizedModel& model, std::span<const double> thetas,
                          const std::function<double(SamplePoint)>& integrand,
                          std::span<const double> breakpoints) {
  const auto& space = model.sample_space();
  if (space.enumerable()) {
    double total = 0.0;
    for (const auto& c : model.support_classes(thetas)) {
      const double v = integrand(c.representative);
      if (v != 0.0) total += std::exp(c.log_multiplicity) * v;
    }
    return total;
  }
  return integrate(integrand, space.lo, space.hi, space.rule, breakpoints);
}

std::vector<double> ratio_crossings(const UnnormalizedModel& model, double theta_a,
                                    double theta_b, double log_c) {
  const auto [lo_a, hi_a] = model.effective_support(theta_a);
  const auto [lo_b, hi_b] = model.effective_support(theta_b);
  const double lo = std::min(lo_a, lo_b);
  const double hi = std::max(hi_a, hi_b);
  return find_roots(
      [&](double x) { return log_c + model.log_f(theta_a, x) - model.log_f(theta_b, x); }, lo, hi);
}

double expected_capped_ratio(const UnnormalizedModel& model, double from, double to,
                             double log_c) {
  const double log_z_to = model.log_Z(to);
  const double thetas[] = {from, to};
  auto term = [&](SamplePoint w) {
    const double log_p_to = model.log_f(to, w) - log_z_to;
    if (log_p_to == -std::numeric_limits<double>::infinity()) return 0.0;
    const double log_other = log_c + model.log_f(from, w) - log_z_to;
    return std::exp(std::min(log_p_to, log_other));
  };
  if (model.sample_space().enumerable()) return sample_space_total(model, thetas, term);
  const auto cuts = ratio_crossings(model, from, to, log_c);
  return sample_space_total(model, thetas, term, cuts);
}

}  // namespace exmc
