#pragma once

#include <string_view>
#include <vector>

#include "exmc/model.hpp"
#include "exmc/posterior.hpp"
#include "exmc/prior.hpp"

namespace exmc {

struct ModelWithPrior {
  ModelPtr model;
  Prior prior;

  PosteriorSpec posterior(SamplePoint data) const { return PosteriorSpec(model, prior, data); }
};

/// Bernoulli likelihood on Theta = {1/4, 3/4}, prior (3/4, 1/4), one
/// observation x = 1. The posterior is uniform on Theta.
struct TwoPointExample {
  ModelPtr model;
  Prior prior;
  SamplePoint data = 1.0;

  PosteriorSpec posterior() const { return PosteriorSpec(model, prior, data); }
};

TwoPointExample make_two_point_bernoulli();

/// Binomial(n, theta) with a Beta(a, b) prior truncated to [lo, hi].
ModelWithPrior make_beta_binomial(int n, double lo, double hi, double a, double b);

/// Exponential(theta) likelihood with an Exp(1) prior; posterior given x
/// is Gamma(2, x + 1).
ModelWithPrior make_exponential_gamma();

/// Poisson(theta). Rejects priors whose support leaves [0, inf).
ModelPtr make_poisson(const Prior& prior);

/// N(theta, 1) likelihood with a N(0, prior_sd^2) prior.
ModelWithPrior make_gaussian_location(double prior_sd);

ModelPtr make_ising(int vertices, std::vector<IsingEdge> edges, double field,
                    ParamSpace params = ParamSpace::real_line());

/// Parses a JSON edge list [[i, j, J_ij], ...].
std::vector<IsingEdge> parse_ising_edges(std::string_view json_text);

ModelPtr make_ergm(int vertices, GraphStatistic statistic,
                   ParamSpace params = ParamSpace::real_line());

}  // namespace exmc
