#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exmc/bound_check.hpp"
#include "exmc/model.hpp"

namespace exmc {

/// ||p_t - p_t'||_TV, as 1/2 sum |p_t - p_t'| over the sample space or
/// 1/2 integral split at the crossings of the two densities.
double tv_distance(const UnnormalizedModel& model, double theta, double theta_prime);

/// 1 - E_{t'}[min(p_t / p_t', 1)], the overlap form of the same distance.
double tv_distance_overlap(const UnnormalizedModel& model, double theta, double theta_prime);

enum class TvModulus { location_profile, poisson_coupling, pinsker_expfam };

std::string to_string(TvModulus modulus);

/// c(s) for the given modulus. location-profile: TV(p_0, p_s);
/// poisson-coupling: 1 - exp(-s); pinsker-expfam: sqrt(2) M / 2 sqrt(s) for
/// M >= 1 and the KL-derived constant sqrt(2 M) / 2 sqrt(s) for M < 1.
double tv_modulus(const UnnormalizedModel& model, TvModulus modulus, double s);

/// Checks TV(t, t + s) <= c(s) over the product of the two grids. Throws
/// ModelMismatchError when the modulus does not apply to the model.
/// Location profiles use a 1e-10 tolerance, the others none.
BoundCheckResult tv_modulus_check(const UnnormalizedModel& model, TvModulus modulus,
                                  std::span<const double> thetas, std::span<const double> shifts);

/// d_KL(t, t'). Throws ModelMismatchError when p_t puts mass where p_t'
/// has none.
double kl_divergence(const UnnormalizedModel& model, double theta, double theta_prime);

struct SymmetrizedKl {
  double kl_sum = 0.0;   // d_KL(t, t') + d_KL(t', t)
  double identity = 0.0; // (t' - t)(E_t'[T] - E_t[T])
  double residual = 0.0;
  bool holds = false;    // residual <= 1e-8
};

/// Exponential-family identity for the symmetrized divergence.
SymmetrizedKl symmetrized_kl_identity(const UnnormalizedModel& model, double theta,
                                      double theta_prime);

/// TV <= 1/2 sqrt(symmetrized KL) <= c(|t - t'|) for every pair, both links
/// checked; bounded-T exponential families only.
BoundCheckResult pinsker_chain_check(const UnnormalizedModel& model,
                                     std::span<const std::pair<double, double>> pairs);

/// P_t'({x : p_t(x) > delta p_t'(x)}).
double non_negligible_mass(const UnnormalizedModel& model, double theta, double theta_prime,
                           double delta);

struct NonNegligibilityReport {
  double delta = 0.0;
  std::vector<std::pair<double, double>> pairs;
  std::vector<double> probabilities;
  double infimum = 0.0;
  std::pair<double, double> argmin;
  static constexpr double kFloor = 1e-12;

  bool positive() const noexcept { return infimum > kFloor; }
  BoundCheckResult to_bound_check() const;
};

/// Grid infimum of P_t'(A_{t,t'}(delta)) over all pairs from `thetas`.
NonNegligibilityReport non_negligibility(const UnnormalizedModel& model, double delta,
                                         std::span<const double> thetas);

/// Same over an explicit list of (t, t') pairs.
NonNegligibilityReport non_negligibility(const UnnormalizedModel& model, double delta,
                                         std::span<const std::pair<double, double>> pairs);

}  // namespace exmc
