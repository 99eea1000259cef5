#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "exmc/rng.hpp"

namespace exmc {

enum class ProposalFamily {
  random_walk_gaussian,
  random_walk_uniform,
  random_walk_cauchy,
  independence,
  discrete_uniform,
  discrete_matrix,
};

std::string to_string(ProposalFamily family);

/// Proposal kernel q(theta, theta'). Continuous families are densities in
/// theta'; discrete families are transition probabilities on a finite set
/// of points.
class Proposal {
 public:
  static Proposal random_walk_gaussian(double scale = 1.0);
  static Proposal random_walk_uniform(double half_width = 1.0);
  static Proposal random_walk_cauchy(double scale = 1.0);
  /// q(theta, theta') = g(theta'), independent of the current state.
  static Proposal independence(std::function<double(double)> log_density,
                               std::function<double(RngStream&)> sampler,
                               std::string label = "independence");
  static Proposal independence_uniform(double lo, double hi);
  static Proposal independence_gamma(double shape, double rate);
  /// Uniform over the other points of a finite set.
  static Proposal discrete_uniform(std::vector<double> points);
  /// Row-stochastic matrix q[i][j] over sorted `points`.
  static Proposal discrete_matrix(std::vector<double> points,
                                  std::vector<std::vector<double>> matrix);

  double log_q(double from, double to) const;
  double sample(double from, RngStream& rng) const;

  ProposalFamily family() const noexcept { return family_; }
  bool symmetric() const noexcept { return symmetric_; }
  bool is_random_walk() const noexcept;
  bool is_discrete() const noexcept;
  /// Scale parameter for random walks (sd, half-width or Cauchy scale).
  double scale() const noexcept { return scale_; }
  const std::string& label() const noexcept { return label_; }

  /// Grid points and transition matrix of a discrete proposal.
  const std::vector<double>& points() const;
  double probability(std::size_t from_index, std::size_t to_index) const;
  /// Index of `theta` among points(); throws when theta is not a grid point.
  std::size_t index_of(double theta) const;

 private:
  struct Discrete {
    std::vector<double> points;
    std::vector<std::vector<double>> matrix;
    std::vector<std::vector<double>> cumulative;
  };

  Proposal() = default;

  ProposalFamily family_ = ProposalFamily::random_walk_gaussian;
  bool symmetric_ = true;
  double scale_ = 1.0;
  std::string label_;
  std::function<double(double)> independence_log_density_;
  std::function<double(RngStream&)> independence_sampler_;
  std::shared_ptr<const Discrete> discrete_;
};

}  // namespace exmc
