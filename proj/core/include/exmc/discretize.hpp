#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "exmc/posterior.hpp"
#include "exmc/proposal.hpp"

namespace exmc {

struct GridSpec {
  static constexpr std::size_t kDefaultSize = 101;
  static constexpr std::size_t kMaxSize = 2001;

  std::optional<double> lo;
  std::optional<double> hi;
  std::size_t size = kDefaultSize;
};

/// Finite surrogate of a continuous-parameter problem: a discrete prior on a
/// uniform grid carrying mass pi(theta_j) w_j, and a proposal matrix with
/// q_ij proportional to q(theta_i, theta_j) w_j. w are trapezoid weights.
struct DiscretizedProblem {
  PosteriorSpec posterior;
  Proposal proposal;
  std::vector<double> grid;
  std::vector<double> weights;
};

/// Central interval holding posterior mass `mass`, by quadrature.
std::pair<double, double> posterior_mass_interval(const PosteriorSpec& posterior,
                                                  double mass = 0.9999);

/// Posterior mean of h by quadrature (continuous parameter spaces).
double posterior_expectation(const PosteriorSpec& posterior,
                             const std::function<double(double)>& h);

/// Discretizes a continuous-parameter posterior and proposal. Missing grid
/// bounds default to the 0.9999 posterior-mass interval. Discrete
/// posteriors pass through unchanged, with their proposal.
DiscretizedProblem discretize(const PosteriorSpec& posterior, const Proposal& proposal,
                              const GridSpec& grid = {});

}  // namespace exmc
