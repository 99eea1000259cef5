#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace exmc {

struct GoodnessOfFit {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
};

/// Pearson chi-square test of observed counts against cell probabilities.
/// Cells with expected count below `min_expected` are pooled together.
GoodnessOfFit chi_square_test(std::span<const double> observed,
                              std::span<const double> probabilities,
                              double min_expected = 5.0);

/// One-sample Kolmogorov-Smirnov test against the standard normal.
GoodnessOfFit ks_test_standard_normal(std::vector<double> samples);

/// P(K > x) for the limiting Kolmogorov distribution.
double kolmogorov_survival(double x);

double normal_cdf(double x);

double log_sum_exp(std::span<const double> values);

double mean(std::span<const double> values);
double sample_variance(std::span<const double> values);

}  // namespace exmc
