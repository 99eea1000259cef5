#include "exmc/posterior.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "exmc/errors.hpp"
#include "exmc/stats.hpp"

namespace exmc {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

IntractablePosterior::IntractablePosterior(Prior prior,
                                           std::shared_ptr<const Likelihood> likelihood,
                                           SamplePoint data)
    : prior_(std::move(prior)), likelihood_(std::move(likelihood)), data_(data) {}

double IntractablePosterior::log_target_without_normalizer(double theta) const {
  const double lp = prior_.log_density(theta);
  if (lp == kNegInf) return kNegInf;
  return lp + likelihood_->log_f(theta, data_);
}

PosteriorSpec::PosteriorSpec(ModelPtr model, Prior prior, SamplePoint data)
    : model_(std::move(model)), prior_(std::move(prior)), data_(data) {
  if (!model_) throw std::invalid_argument("posterior needs a model");
  if (!model_->param_space().includes(prior_.support())) {
    throw ModelMismatchError("prior support " + prior_.support().describe() +
                             " is not inside the model parameter space " +
                             model_->param_space().describe());
  }
  // Probe for at least one point of positive posterior density.
  bool positive = false;
  const auto& s = prior_.support();
  if (s.is_finite()) {
    for (double t : s.points()) positive = positive || std::isfinite(log_unnormalized(t));
  } else {
    const double lo = std::isfinite(s.lo()) ? s.lo() : -50.0;
    const double hi = std::isfinite(s.hi()) ? s.hi() : (lo + 100.0);
    for (int i = 1; i < 400 && !positive; ++i) {
      const double t = lo + (hi - lo) * i / 400.0;
      positive = std::isfinite(log_unnormalized(t));
    }
  }
  if (!positive) throw UndefinedDensityError("posterior is zero everywhere on the probe grid");
}

double PosteriorSpec::log_unnormalized(double theta) const {
  const double lp = prior_.log_density(theta);
  if (lp == kNegInf) return kNegInf;
  const double v = lp + model_->log_f(theta, data_) - model_->log_Z(theta);
  return std::isnan(v) ? kNegInf : v;
}

IntractablePosterior PosteriorSpec::z_blind() const {
  return IntractablePosterior(prior_, model_, data_);
}

std::vector<double> PosteriorSpec::grid_posterior() const {
  if (!prior_.support().is_finite()) {
    throw std::logic_error("grid_posterior needs a discrete prior");
  }
  const auto& pts = prior_.support().points();
  std::vector<double> logs(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) logs[i] = log_unnormalized(pts[i]);
  const double norm = log_sum_exp(logs);
  for (auto& v : logs) v = std::exp(v - norm);
  return logs;
}

}  // namespace exmc
