#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "exmc/model.hpp"
#include "exmc/space.hpp"

namespace exmc {

enum class PriorFamily {
  gamma,
  truncated_beta,
  gaussian,
  truncated_gaussian,
  mixture,
  conjugate_exponential_family,
  discrete,
  cauchy,
};

std::string to_string(PriorFamily family);

/// A prior density (possibly unnormalized) with its support. The log
/// density is finite on the support and -inf outside it.
class Prior {
 public:
  static Prior gamma(double shape, double rate);
  static Prior exponential(double rate) { return gamma(1.0, rate); }
  static Prior truncated_beta(double a, double b, double lo, double hi);
  static Prior gaussian(double mean, double sd);
  static Prior truncated_gaussian(double mean, double sd, double lo, double hi);
  /// Cauchy(location, scale). Heavy-tailed control for tail checks.
  static Prior cauchy(double location, double scale);
  /// Finite mixture of priors sharing one support.
  static Prior mixture(std::vector<double> weights, std::vector<Prior> components);
  /// Point masses; `masses` need not sum to one.
  static Prior discrete(std::vector<double> points, std::vector<double> masses);

  double log_density(double theta) const;
  const ParamSpace& support() const noexcept { return support_; }
  PriorFamily family() const noexcept { return family_; }

  /// Point masses of a discrete prior, in the order of support().points().
  const std::vector<double>& masses() const noexcept { return masses_; }

  Prior(PriorFamily family, ParamSpace support, std::function<double(double)> log_density);

 private:
  PriorFamily family_;
  ParamSpace support_;
  std::function<double(double)> log_density_;
  std::vector<double> masses_;
};

/// Conjugate prior pi(theta) ∝ exp(n0 (theta t - eta(theta))) for an
/// exponential-family model, with eta = log_Z. Requires n0 > 0 and t
/// strictly between the essential infimum and supremum of T.
Prior make_conjugate_prior(const ModelPtr& model, double n0, double t);

}  // namespace exmc
