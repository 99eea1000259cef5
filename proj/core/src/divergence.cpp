#include "exmc/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "exmc/errors.hpp"
#include "exmc/sample_space.hpp"

namespace exmc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_param(const UnnormalizedModel& model, double theta) {
  if (!model.param_space().contains(theta)) {
    throw std::invalid_argument(model.name() + ": parameter " + std::to_string(theta) +
                                " outside " + model.param_space().describe());
  }
}

// Crossings of log p_a - log p_b - log_shift on a continuum space.
std::vector<double> density_crossings(const UnnormalizedModel& model, double a, double b,
                                      double log_shift) {
  return ratio_crossings(model, a, b, model.log_Z(b) - model.log_Z(a) - log_shift);
}

}  // namespace

double tv_distance(const UnnormalizedModel& model, double theta, double theta_prime) {
  require_param(model, theta);
  require_param(model, theta_prime);
  if (theta == theta_prime) return 0.0;
  // Fixed argument order keeps the result exactly symmetric.
  const double a = std::min(theta, theta_prime);
  const double b = std::max(theta, theta_prime);
  const double za = model.log_Z(a);
  const double zb = model.log_Z(b);
  auto gap = [&](SamplePoint x) {
    const double pa = std::exp(model.log_f(a, x) - za);
    const double pb = std::exp(model.log_f(b, x) - zb);
    return std::abs(pa - pb);
  };
  const double thetas[] = {a, b};
  double total = 0.0;
  if (model.sample_space().enumerable()) {
    total = sample_space_total(model, thetas, gap);
  } else {
    const auto cuts = density_crossings(model, a, b, 0.0);
    total = sample_space_total(model, thetas, gap, cuts);
  }
  return std::clamp(0.5 * total, 0.0, 1.0);
}

double tv_distance_overlap(const UnnormalizedModel& model, double theta, double theta_prime) {
  require_param(model, theta);
  require_param(model, theta_prime);
  const double overlap = expected_capped_ratio(model, theta, theta_prime,
                                               model.log_Z(theta_prime) - model.log_Z(theta));
  return std::clamp(1.0 - overlap, 0.0, 1.0);
}

std::string to_string(TvModulus modulus) {
  switch (modulus) {
    case TvModulus::location_profile: return "location-profile";
    case TvModulus::poisson_coupling: return "poisson-coupling";
    case TvModulus::pinsker_expfam: return "pinsker-expfam";
  }
  return "unknown";
}

namespace {

void require_modulus(const UnnormalizedModel& model, TvModulus modulus) {
  bool ok = false;
  switch (modulus) {
    case TvModulus::location_profile:
      ok = model.kind() == ModelKind::gaussian_location;
      break;
    case TvModulus::poisson_coupling:
      ok = model.kind() == ModelKind::poisson;
      break;
    case TvModulus::pinsker_expfam:
      ok = model.is_exponential_family() && model.sufficient_stat_bound().has_value();
      break;
  }
  if (!ok) {
    throw ModelMismatchError("modulus " + to_string(modulus) + " does not apply to model " +
                             model.name());
  }
}

double pinsker_constant(double bound) {
  return std::sqrt(2.0) / 2.0 * std::max(bound, std::sqrt(bound));
}

}  // namespace

double tv_modulus(const UnnormalizedModel& model, TvModulus modulus, double s) {
  require_modulus(model, modulus);
  if (!(s >= 0.0)) throw std::invalid_argument("modulus needs s >= 0");
  switch (modulus) {
    case TvModulus::location_profile: return tv_distance(model, 0.0, s);
    case TvModulus::poisson_coupling: return -std::expm1(-s);
    case TvModulus::pinsker_expfam:
      return pinsker_constant(*model.sufficient_stat_bound()) * std::sqrt(s);
  }
  return 1.0;
}

BoundCheckResult tv_modulus_check(const UnnormalizedModel& model, TvModulus modulus,
                                  std::span<const double> thetas, std::span<const double> shifts) {
  require_modulus(model, modulus);
  std::vector<std::vector<double>> points;
  std::vector<double> lhs;
  std::vector<double> rhs;
  for (double s : shifts) {
    const double c = tv_modulus(model, modulus, s);
    for (double t : thetas) {
      points.push_back({t, s});
      lhs.push_back(tv_distance(model, t, t + s));
      rhs.push_back(c);
    }
  }
  const double tol = modulus == TvModulus::location_profile ? 1e-10 : 1e-12;
  return make_bound_check("tv-modulus/" + to_string(modulus), std::move(points), std::move(lhs),
                          std::move(rhs), tol, "holds on tested grid only");
}

double kl_divergence(const UnnormalizedModel& model, double theta, double theta_prime) {
  require_param(model, theta);
  require_param(model, theta_prime);
  if (theta == theta_prime) return 0.0;
  const double za = model.log_Z(theta);
  const double zb = model.log_Z(theta_prime);
  auto term = [&](SamplePoint x) {
    const double la = model.log_f(theta, x) - za;
    if (la == kNegInf) return 0.0;
    const double lb = model.log_f(theta_prime, x) - zb;
    if (lb == kNegInf) {
      throw ModelMismatchError("KL divergence: supports of the two distributions differ");
    }
    return std::exp(la) * (la - lb);
  };
  const double thetas[] = {theta, theta_prime};
  const double kl = sample_space_total(model, thetas, term);
  return std::max(0.0, kl);
}

SymmetrizedKl symmetrized_kl_identity(const UnnormalizedModel& model, double theta,
                                      double theta_prime) {
  if (!model.is_exponential_family()) {
    throw ModelMismatchError(model.name() + " is not an exponential family");
  }
  SymmetrizedKl r;
  r.kl_sum = kl_divergence(model, theta, theta_prime) + kl_divergence(model, theta_prime, theta);
  r.identity = (theta_prime - theta) * (expected_sufficient_stat(model, theta_prime) -
                                        expected_sufficient_stat(model, theta));
  r.residual = std::abs(r.kl_sum - r.identity);
  r.holds = r.residual <= 1e-8;
  return r;
}

BoundCheckResult pinsker_chain_check(const UnnormalizedModel& model,
                                     std::span<const std::pair<double, double>> pairs) {
  require_modulus(model, TvModulus::pinsker_expfam);
  std::vector<std::vector<double>> points;
  std::vector<double> lhs;
  std::vector<double> rhs;
  for (const auto& [a, b] : pairs) {
    const double tv = tv_distance(model, a, b);
    const double mid = 0.5 * std::sqrt(kl_divergence(model, a, b) + kl_divergence(model, b, a));
    const double c = tv_modulus(model, TvModulus::pinsker_expfam, std::abs(b - a));
    points.push_back({a, b});
    lhs.push_back(tv);
    rhs.push_back(mid);
    points.push_back({a, b});
    lhs.push_back(mid);
    rhs.push_back(c);
  }
  return make_bound_check("pinsker-chain", std::move(points), std::move(lhs), std::move(rhs),
                          1e-12, "rows alternate: TV <= half root of symmetrized KL, then that <= c(s)");
}

double non_negligible_mass(const UnnormalizedModel& model, double theta, double theta_prime,
                           double delta) {
  require_param(model, theta);
  require_param(model, theta_prime);
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (theta == theta_prime) return delta < 1.0 ? 1.0 : 0.0;
  const double za = model.log_Z(theta);
  const double zb = model.log_Z(theta_prime);
  const double log_delta = std::log(delta);
  auto term = [&](SamplePoint x) {
    const double lb = model.log_f(theta_prime, x) - zb;
    if (lb == kNegInf) return 0.0;
    const double la = model.log_f(theta, x) - za;
    return la - lb > log_delta ? std::exp(lb) : 0.0;
  };
  const double thetas[] = {theta, theta_prime};
  if (model.sample_space().enumerable()) return sample_space_total(model, thetas, term);
  const auto cuts = density_crossings(model, theta, theta_prime, log_delta);
  return std::clamp(sample_space_total(model, thetas, term, cuts), 0.0, 1.0);
}

BoundCheckResult NonNegligibilityReport::to_bound_check() const {
  std::vector<std::vector<double>> points;
  for (const auto& [a, b] : pairs) points.push_back({a, b});
  std::vector<double> lhs(probabilities.size(), kFloor);
  return make_bound_check("non-negligibility", std::move(points), std::move(lhs), probabilities,
                          0.0, "grid infimum only; the definition quantifies over all pairs");
}

NonNegligibilityReport non_negligibility(const UnnormalizedModel& model, double delta,
                                         std::span<const std::pair<double, double>> pairs) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  NonNegligibilityReport r;
  r.delta = delta;
  r.infimum = std::numeric_limits<double>::infinity();
  for (const auto& pr : pairs) {
    const double p = non_negligible_mass(model, pr.first, pr.second, delta);
    r.pairs.push_back(pr);
    r.probabilities.push_back(p);
    if (p < r.infimum) {
      r.infimum = p;
      r.argmin = pr;
    }
  }
  if (pairs.empty()) r.infimum = 1.0;
  return r;
}

NonNegligibilityReport non_negligibility(const UnnormalizedModel& model, double delta,
                                         std::span<const double> thetas) {
  std::vector<std::pair<double, double>> pairs;
  for (double a : thetas) {
    for (double b : thetas) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  return non_negligibility(model, delta, std::span<const std::pair<double, double>>(pairs));
}

}  // namespace exmc
