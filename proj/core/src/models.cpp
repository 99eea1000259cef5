#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "exmc/errors.hpp"
#include "exmc/model.hpp"

namespace exmc {

std::vector<SupportClass> UnnormalizedModel::support_classes(
    std::span<const double> thetas) const {
  const auto& space = sample_space();
  if (!space.enumerable()) {
    throw std::logic_error(name() + ": continuum sample space cannot be enumerated");
  }
  std::size_t n = 0;
  if (space.kind == SampleSpace::Kind::finite) {
    n = space.size;
  } else {
    for (double t : thetas) n = std::max(n, enumeration_size(t));
  }
  std::vector<SupportClass> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {static_cast<double>(i), 0.0};
  return out;
}

std::size_t UnnormalizedModel::enumeration_size(double) const {
  const auto& space = sample_space();
  if (space.kind == SampleSpace::Kind::finite) return space.size;
  throw std::logic_error(name() + ": enumeration_size not defined");
}

std::pair<double, double> UnnormalizedModel::effective_support(double) const {
  const auto& space = sample_space();
  return {space.lo, space.hi};
}

double expected_sufficient_stat(const UnnormalizedModel& model, double theta) {
  if (!model.is_exponential_family()) {
    throw ModelMismatchError(model.name() + " is not an exponential family");
  }
  const double log_z = model.log_Z(theta);
  const double thetas[] = {theta};
  double e = 0.0;
  for (const auto& c : model.support_classes(thetas)) {
    e += std::exp(c.log_multiplicity + model.log_f(theta, c.representative) - log_z) *
         *model.sufficient_stat(c.representative);
  }
  return e;
}

namespace {

void require_in(const ParamSpace& space, double theta, const char* who) {
  if (!space.contains(theta)) {
    throw std::domain_error(std::string(who) + ": parameter " + std::to_string(theta) +
                            " outside " + space.describe());
  }
}

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// x * log(p) with the convention 0 * log 0 = 0.
double xlogy(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); }

}  // namespace

// --- Bernoulli --------------------------------------------------------------

BernoulliModel::BernoulliModel(ParamSpace params) : params_(std::move(params)) {
  if (params_.lo() < 0.0 || params_.hi() > 1.0) {
    throw std::invalid_argument("bernoulli parameter space must lie in [0, 1]");
  }
}

double BernoulliModel::log_f(double theta, SamplePoint x) const {
  if (x == 1.0) return std::log(theta);
  if (x == 0.0) return std::log1p(-theta);
  return kNegInf;
}

SamplePoint BernoulliModel::draw(double theta, RngStream& rng) const {
  require_in(params_, theta, "bernoulli draw");
  return rng.uniform() < theta ? 1.0 : 0.0;
}

// --- Binomial ---------------------------------------------------------------

BinomialModel::BinomialModel(int trials, ParamSpace params)
    : trials_(trials), params_(std::move(params)) {
  if (trials < 1) throw std::invalid_argument("binomial needs at least one trial");
  if (params_.lo() < 0.0 || params_.hi() > 1.0) {
    throw std::invalid_argument("binomial parameter space must lie in [0, 1]");
  }
  space_ = SampleSpace::finite(static_cast<std::size_t>(trials) + 1);
  log_choose_.resize(trials + 1);
  for (int k = 0; k <= trials; ++k) {
    log_choose_[k] = std::lgamma(trials + 1.0) - std::lgamma(k + 1.0) - std::lgamma(trials - k + 1.0);
  }
}

double BinomialModel::log_f(double theta, SamplePoint x) const {
  if (x < 0.0 || x > trials_ || x != std::floor(x)) return kNegInf;
  const int k = static_cast<int>(x);
  return log_choose_[k] + xlogy(k, theta) + xlogy(trials_ - k, 1.0 - theta);
}

SamplePoint BinomialModel::draw(double theta, RngStream& rng) const {
  require_in(params_, theta, "binomial draw");
  double u = rng.uniform();
  for (int k = 0; k < trials_; ++k) {
    u -= std::exp(log_f(theta, k));
    if (u <= 0.0) return k;
  }
  return trials_;
}

// --- Exponential ------------------------------------------------------------

ExponentialModel::ExponentialModel() = default;

double ExponentialModel::log_f(double theta, SamplePoint x) const {
  if (x < 0.0) return kNegInf;
  return std::log(theta) - theta * x;
}

SamplePoint ExponentialModel::draw(double theta, RngStream& rng) const {
  require_in(params_, theta, "exponential draw");
  return rng.exponential(theta);
}

std::pair<double, double> ExponentialModel::effective_support(double theta) const {
  return {0.0, 40.0 / theta};
}

// --- Poisson ----------------------------------------------------------------

PoissonModel::PoissonModel() = default;

double PoissonModel::log_f(double theta, SamplePoint x) const {
  if (x < 0.0 || x != std::floor(x)) return kNegInf;
  if (theta == 0.0) return x == 0.0 ? 0.0 : kNegInf;
  return x * std::log(theta) - theta - std::lgamma(x + 1.0);
}

std::size_t PoissonModel::enumeration_size(double theta) const {
  if (theta == 0.0) return 1;
  // Smallest N with P(X >= N) = P(N, theta) <= kTailMass.
  std::size_t n = static_cast<std::size_t>(std::floor(theta)) + 1;
  while (boost::math::gamma_p(static_cast<double>(n), theta) > kTailMass) ++n;
  return n;
}

SamplePoint PoissonModel::draw(double theta, RngStream& rng) const {
  require_in(params_, theta, "poisson draw");
  if (theta == 0.0) return 0.0;
  const double u = rng.uniform();
  double cdf = 0.0;
  for (std::size_t k = 0;; ++k) {
    cdf += std::exp(log_f(theta, static_cast<double>(k)));
    if (u <= cdf || k > 10 * (theta + 100)) return static_cast<double>(k);
  }
}

// --- Gaussian location --------------------------------------------------------

GaussianLocationModel::GaussianLocationModel() = default;

double GaussianLocationModel::log_f(double theta, SamplePoint x) const {
  const double d = x - theta;
  return -0.5 * d * d;
}

double GaussianLocationModel::log_Z(double) const {
  return 0.5 * std::log(2.0 * std::numbers::pi);
}

SamplePoint GaussianLocationModel::draw(double theta, RngStream& rng) const {
  return theta + rng.normal();
}

std::pair<double, double> GaussianLocationModel::effective_support(double theta) const {
  return {theta - 12.0, theta + 12.0};
}

}  // namespace exmc
