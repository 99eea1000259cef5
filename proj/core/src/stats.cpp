#include "exmc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace exmc {

GoodnessOfFit chi_square_test(std::span<const double> observed,
                              std::span<const double> probabilities,
                              double min_expected) {
  if (observed.size() != probabilities.size() || observed.empty()) {
    throw std::invalid_argument("chi_square_test: size mismatch");
  }
  const double n = std::accumulate(observed.begin(), observed.end(), 0.0);
  const double p_total = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  double statistic = 0.0;
  std::size_t cells = 0;
  double pooled_obs = 0.0;
  double pooled_exp = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = n * probabilities[i] / p_total;
    if (expected < min_expected) {
      pooled_obs += observed[i];
      pooled_exp += expected;
      continue;
    }
    statistic += (observed[i] - expected) * (observed[i] - expected) / expected;
    ++cells;
  }
  if (pooled_exp > 0.0) {
    statistic += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
    ++cells;
  } else if (pooled_obs > 0.0) {
    statistic = std::numeric_limits<double>::infinity();
  }
  GoodnessOfFit out;
  out.statistic = statistic;
  out.dof = cells > 1 ? static_cast<double>(cells - 1) : 0.0;
  if (out.dof == 0.0) {
    out.p_value = statistic == 0.0 ? 1.0 : 0.0;
  } else if (!std::isfinite(statistic)) {
    out.p_value = 0.0;
  } else {
    boost::math::chi_squared dist(out.dof);
    out.p_value = boost::math::cdf(boost::math::complement(dist, statistic));
  }
  return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double kolmogorov_survival(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 1.18) {
    // Small-x form: sqrt(2 pi)/x * sum exp(-(2k-1)^2 pi^2 / (8 x^2)).
    const double pi = 3.14159265358979323846;
    const double y = std::exp(-pi * pi / (8.0 * x * x));
    double s = 0.0;
    for (int k = 1; k <= 8; ++k) s += std::pow(y, (2 * k - 1) * (2 * k - 1));
    return 1.0 - std::sqrt(2.0 * pi) / x * s;
  }
  double s = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    s += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-300) break;
  }
  return std::clamp(s, 0.0, 1.0);
}

GoodnessOfFit ks_test_standard_normal(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("ks_test_standard_normal: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = normal_cdf(samples[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - cdf,
                  cdf - static_cast<double>(i) / n});
  }
  GoodnessOfFit out;
  out.statistic = d;
  out.dof = n;
  const double root_n = std::sqrt(n);
  out.p_value = kolmogorov_survival((root_n + 0.12 + 0.11 / root_n) * d);
  return out;
}

double log_sum_exp(std::span<const double> values) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : values) hi = std::max(hi, v);
  if (!std::isfinite(hi)) return hi;
  double s = 0.0;
  for (double v : values) s += std::exp(v - hi);
  return hi + std::log(s);
}

double mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean of empty range");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("sample_variance needs two values");
  const double m = mean(values);
  double s = 0.0;
  for (double v : values) s += (v - m) * (v - m);
  return s / static_cast<double>(values.size() - 1);
}

}  // namespace exmc
