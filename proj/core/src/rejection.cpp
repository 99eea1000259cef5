#include "exmc/rejection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "exmc/quadrature.hpp"
#include "exmc/sample_space.hpp"

namespace exmc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// E_{w ~ Exp(t')}[min(1, exp(log_c) f_t(w) / f_t'(w))] for f_t(w) = t e^{-t w}.
// The capped ratio crosses 1 at w* = log_c / (t - t') + w0(t, t').
double exponential_capped_ratio(double theta, double theta_prime, double log_c) {
  if (theta == theta_prime) return std::exp(std::min(0.0, log_c));
  const double w_star = log_c / (theta - theta_prime) + exchange_w0(theta, theta_prime);
  const double c = std::exp(log_c);
  if (theta_prime > theta) {
    // Ratio increases in w; capped at 1 beyond w*.
    if (w_star <= 0.0) return 1.0;
    return c * -std::expm1(-theta * w_star) + std::exp(-theta_prime * w_star);
  }
  // Ratio decreases in w; capped at 1 before w*.
  if (w_star <= 0.0) return std::min(1.0, c);
  return -std::expm1(-theta_prime * w_star) + c * std::exp(-theta * w_star);
}

double log_acceptance_prefactor(const PosteriorSpec& posterior, const Proposal& proposal,
                                double theta, double theta_prime) {
  const auto& model = posterior.model();
  const auto& prior = posterior.prior();
  const double x = posterior.data();
  return prior.log_density(theta_prime) + proposal.log_q(theta_prime, theta) +
         model.log_f(theta_prime, x) - prior.log_density(theta) -
         proposal.log_q(theta, theta_prime) - model.log_f(theta, x);
}

}  // namespace

double exchange_w0(double theta, double theta_prime) {
  if (!(theta > 0.0) || !(theta_prime > 0.0)) {
    throw std::invalid_argument("w0 needs positive parameters");
  }
  const double d = theta - theta_prime;
  if (std::abs(d) < 1e-8) return 1.0 / theta;
  // log(t / t') = log1p(d / t') stays accurate for small relative gaps.
  return std::log1p(d / theta_prime) / d;
}

double exchange_move_density(const PosteriorSpec& posterior, const Proposal& proposal,
                             double theta, double theta_prime) {
  if (posterior.prior().log_density(theta_prime) == kNegInf) return 0.0;
  const double lq = proposal.log_q(theta, theta_prime);
  if (lq == kNegInf) return 0.0;
  const auto& model = posterior.model();
  const double log_c = log_acceptance_prefactor(posterior, proposal, theta, theta_prime);
  if (std::isnan(log_c) || log_c == kNegInf) return 0.0;
  const double e = model.kind() == ModelKind::exponential
                       ? exponential_capped_ratio(theta, theta_prime, log_c)
                       : expected_capped_ratio(model, theta, theta_prime, log_c);
  return std::exp(lq) * e;
}

double rejection_probability(const PosteriorSpec& posterior, const Proposal& proposal,
                             double theta) {
  const auto& support = posterior.prior().support();
  if (!support.contains(theta) || posterior.log_unnormalized(theta) == kNegInf) {
    throw std::invalid_argument("rejection probability needs theta with positive posterior density");
  }
  double moved = 0.0;
  if (support.is_finite()) {
    for (double t : support.points()) {
      if (t != theta) moved += exchange_move_density(posterior, proposal, theta, t);
    }
  } else {
    std::vector<double> cuts{theta};
    if (proposal.family() == ProposalFamily::random_walk_uniform) {
      cuts.push_back(theta - proposal.scale());
      cuts.push_back(theta + proposal.scale());
    }
    double lo = support.lo();
    double hi = support.hi();
    if (proposal.family() == ProposalFamily::random_walk_uniform) {
      lo = std::max(lo, theta - proposal.scale());
      hi = std::min(hi, theta + proposal.scale());
    }
    const QuadratureRule rule{1e-11, 1e-10, 24};
    moved = integrate(
        [&](double t) { return exchange_move_density(posterior, proposal, theta, t); }, lo, hi,
        rule, cuts);
  }
  return std::clamp(1.0 - moved, 0.0, 1.0);
}

BoundCheckResult RejectionTable::to_bound_check() const {
  std::vector<std::vector<double>> points;
  for (double t : thetas) points.push_back({t});
  std::vector<double> ones(values.size(), 1.0);
  return make_bound_check("rejection-probability", std::move(points), values, std::move(ones), 0.0,
                          strictly_increasing ? "strictly increasing over the tested thetas"
                                              : "not monotone over the tested thetas");
}

RejectionTable rejection_table(const PosteriorSpec& posterior, const Proposal& proposal,
                               std::span<const double> thetas) {
  RejectionTable t;
  t.thetas.assign(thetas.begin(), thetas.end());
  for (double th : thetas) t.values.push_back(rejection_probability(posterior, proposal, th));
  t.strictly_increasing = !t.values.empty();
  for (std::size_t i = 1; i < t.values.size(); ++i) {
    t.strictly_increasing = t.strictly_increasing && t.values[i] > t.values[i - 1];
  }
  return t;
}

}  // namespace exmc
