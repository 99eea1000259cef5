#include "exmc/prior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "exmc/errors.hpp"
#include "exmc/stats.hpp"

namespace exmc {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

std::string to_string(PriorFamily family) {
  switch (family) {
    case PriorFamily::gamma: return "gamma";
    case PriorFamily::truncated_beta: return "truncated-beta";
    case PriorFamily::gaussian: return "gaussian";
    case PriorFamily::truncated_gaussian: return "truncated-gaussian";
    case PriorFamily::mixture: return "mixture";
    case PriorFamily::conjugate_exponential_family: return "conjugate-exponential-family";
    case PriorFamily::discrete: return "discrete";
    case PriorFamily::cauchy: return "cauchy";
  }
  return "unknown";
}

Prior::Prior(PriorFamily family, ParamSpace support, std::function<double(double)> log_density)
    : family_(family), support_(std::move(support)), log_density_(std::move(log_density)) {}

double Prior::log_density(double theta) const {
  if (!support_.contains(theta)) return kNegInf;
  return log_density_(theta);
}

Prior Prior::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) {
    throw std::invalid_argument("gamma prior needs positive shape and rate");
  }
  const double log_norm = shape * std::log(rate) - std::lgamma(shape);
  return Prior(PriorFamily::gamma, ParamSpace::positive_half_line(), [=](double t) {
    if (t == 0.0) return shape == 1.0 ? log_norm : (shape > 1.0 ? kNegInf : kInf);
    return log_norm + (shape - 1.0) * std::log(t) - rate * t;
  });
}

Prior Prior::truncated_beta(double a, double b, double lo, double hi) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta prior needs a, b > 0");
  if (!(lo > 0.0) || !(hi < 1.0) || !(lo < hi)) {
    throw std::invalid_argument("truncated beta prior needs 0 < lo < hi < 1");
  }
  return Prior(PriorFamily::truncated_beta, ParamSpace::interval(lo, hi), [=](double t) {
    return (a - 1.0) * std::log(t) + (b - 1.0) * std::log1p(-t);
  });
}

Prior Prior::gaussian(double mean, double sd) {
  if (!(sd > 0.0)) throw std::invalid_argument("gaussian prior needs sd > 0");
  const double log_norm = -std::log(sd) - 0.5 * std::log(2.0 * std::numbers::pi);
  return Prior(PriorFamily::gaussian, ParamSpace::real_line(), [=](double t) {
    const double z = (t - mean) / sd;
    return log_norm - 0.5 * z * z;
  });
}

Prior Prior::truncated_gaussian(double mean, double sd, double lo, double hi) {
  if (!(sd > 0.0)) throw std::invalid_argument("gaussian prior needs sd > 0");
  return Prior(PriorFamily::truncated_gaussian, ParamSpace::interval(lo, hi), [=](double t) {
    const double z = (t - mean) / sd;
    return -0.5 * z * z;
  });
}

Prior Prior::cauchy(double location, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("cauchy prior needs scale > 0");
  return Prior(PriorFamily::cauchy, ParamSpace::real_line(), [=](double t) {
    const double z = (t - location) / scale;
    return -std::log(std::numbers::pi * scale) - std::log1p(z * z);
  });
}

Prior Prior::mixture(std::vector<double> weights, std::vector<Prior> components) {
  if (weights.empty() || weights.size() != components.size()) {
    throw std::invalid_argument("mixture prior needs one weight per component");
  }
  if (std::any_of(weights.begin(), weights.end(), [](double w) { return !(w > 0.0); })) {
    throw std::invalid_argument("mixture weights must be positive");
  }
  ParamSpace support = components.front().support();
  for (const auto& c : components) {
    if (c.support().is_finite() || support.is_finite()) {
      throw std::invalid_argument("mixture prior components must be continuous");
    }
    if (c.support().lo() != support.lo() || c.support().hi() != support.hi()) {
      throw std::invalid_argument("mixture prior components must share a support");
    }
  }
  std::vector<double> log_w(weights.size());
  std::transform(weights.begin(), weights.end(), log_w.begin(), [](double w) { return std::log(w); });
  auto parts = std::make_shared<const std::vector<Prior>>(std::move(components));
  return Prior(PriorFamily::mixture, support, [parts, log_w](double t) {
    std::vector<double> terms(log_w.size());
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = log_w[i] + (*parts)[i].log_density(t);
    return log_sum_exp(terms);
  });
}

Prior Prior::discrete(std::vector<double> points, std::vector<double> masses) {
  if (points.size() != masses.size()) {
    throw std::invalid_argument("discrete prior needs one mass per point");
  }
  if (std::any_of(masses.begin(), masses.end(), [](double m) { return !(m > 0.0) || !std::isfinite(m); })) {
    throw std::invalid_argument("discrete prior masses must be positive and finite");
  }
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a] < points[b]; });
  std::vector<double> sorted_points;
  std::vector<double> sorted_masses;
  for (auto i : order) {
    sorted_points.push_back(points[i]);
    sorted_masses.push_back(masses[i]);
  }
  auto space = ParamSpace::finite(sorted_points);
  auto table = std::make_shared<const std::vector<double>>(sorted_masses);
  auto grid = std::make_shared<const std::vector<double>>(sorted_points);
  Prior p(PriorFamily::discrete, space, [table, grid](double t) {
    const auto it = std::lower_bound(grid->begin(), grid->end(), t);
    return std::log((*table)[static_cast<std::size_t>(it - grid->begin())]);
  });
  p.masses_ = std::move(sorted_masses);
  return p;
}

Prior make_conjugate_prior(const ModelPtr& model, double n0, double t) {
  if (!model || !model->is_exponential_family()) {
    throw ModelMismatchError("conjugate prior needs an exponential-family model");
  }
  if (!(n0 > 0.0)) throw std::invalid_argument("conjugate prior needs n0 > 0");
  const double thetas[] = {0.0};
  double lo = kInf;
  double hi = -kInf;
  for (const auto& c : model->support_classes(thetas)) {
    const double s = *model->sufficient_stat(c.representative);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  if (!(t > lo) || !(t < hi)) {
    throw std::invalid_argument("conjugate prior needs t strictly inside (" + std::to_string(lo) +
                                ", " + std::to_string(hi) + ")");
  }
  return Prior(PriorFamily::conjugate_exponential_family, model->param_space(),
               [model, n0, t](double theta) { return n0 * (theta * t - model->log_Z(theta)); });
}

}  // namespace exmc
