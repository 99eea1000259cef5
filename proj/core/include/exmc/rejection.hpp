#pragma once

#include <span>
#include <vector>

#include "exmc/bound_check.hpp"
#include "exmc/posterior.hpp"
#include "exmc/proposal.hpp"

namespace exmc {

/// (log t - log t') / (t - t'); the limit 1/t is used when |t - t'| < 1e-8.
double exchange_w0(double theta, double theta_prime);

/// Density (or mass, on a discrete parameter space) of an accepted exchange
/// move t -> t': q(t, t') E_{w ~ p_t'}[min(1, a(t, t', w))]. The expectation
/// is in closed form for the exponential model and computed over the sample
/// space otherwise.
double exchange_move_density(const PosteriorSpec& posterior, const Proposal& proposal,
                             double theta, double theta_prime);

/// P_EX(t, {t}) = 1 - integral (or sum over t' != t) of the move density.
double rejection_probability(const PosteriorSpec& posterior, const Proposal& proposal,
                             double theta);

struct RejectionTable {
  std::vector<double> thetas;
  std::vector<double> values;
  bool strictly_increasing = false;

  BoundCheckResult to_bound_check() const;
};

RejectionTable rejection_table(const PosteriorSpec& posterior, const Proposal& proposal,
                               std::span<const double> thetas);

}  // namespace exmc
