#pragma once

#include <memory>
#include <vector>

#include "exmc/model.hpp"
#include "exmc/prior.hpp"

namespace exmc {

/// Posterior as seen by a practical sampler: prior, data and a Z-blind
/// likelihood. log_target_without_normalizer(theta) = log pi(theta) +
/// log f_theta(x), which differs from the true log posterior by -log Z.
class IntractablePosterior {
 public:
  IntractablePosterior(Prior prior, std::shared_ptr<const Likelihood> likelihood, SamplePoint data);

  const Prior& prior() const noexcept { return prior_; }
  const Likelihood& likelihood() const noexcept { return *likelihood_; }
  SamplePoint data() const noexcept { return data_; }
  double log_target_without_normalizer(double theta) const;

 private:
  Prior prior_;
  std::shared_ptr<const Likelihood> likelihood_;
  SamplePoint data_;
};

/// Prior x model x observation. Evaluating the true posterior reads log_Z
/// and is reserved for idealized MH, exact analysis and diagnostics.
class PosteriorSpec {
 public:
  PosteriorSpec(ModelPtr model, Prior prior, SamplePoint data);

  const UnnormalizedModel& model() const noexcept { return *model_; }
  const ModelPtr& model_ptr() const noexcept { return model_; }
  const Prior& prior() const noexcept { return prior_; }
  SamplePoint data() const noexcept { return data_; }

  /// log pi(theta) + log f_theta(x) - log Z(theta); -inf off the support.
  double log_unnormalized(double theta) const;

  IntractablePosterior z_blind() const;

  /// Normalized posterior masses on the points of a discrete prior.
  std::vector<double> grid_posterior() const;

 private:
  ModelPtr model_;
  Prior prior_;
  SamplePoint data_;
};

}  // namespace exmc
