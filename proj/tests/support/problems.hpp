#pragma once

#include <string>
#include <vector>

#include "exmc/discretize.hpp"
#include "exmc/finite_chain.hpp"
#include "exmc/matrices.hpp"
#include "exmc/zoo.hpp"

namespace exmc::fixtures {

// A grid problem with both exact chains.
struct GridPair {
  std::string name;
  DiscretizedProblem problem;
  FiniteChain mh;
  FiniteChain ex;
};

inline GridPair make_pair(std::string name, const PosteriorSpec& posterior, const Proposal& proposal,
                          GridSpec grid = {}) {
  auto problem = discretize(posterior, proposal, grid);
  auto mh = build_mh_matrix(problem);
  auto ex = build_exchange_matrix(problem);
  return {std::move(name), std::move(problem), std::move(mh), std::move(ex)};
}

inline GridPair two_point() {
  const auto tp = make_two_point_bernoulli();
  return make_pair("two-point", tp.posterior(), Proposal::discrete_uniform({0.25, 0.75}));
}

inline GridPair beta_binomial(std::size_t K = 101) {
  const auto mp = make_beta_binomial(10, 0.2, 0.8, 2.0, 2.0);
  GridSpec g;
  g.lo = 0.2;
  g.hi = 0.8;
  g.size = K;
  return make_pair("beta-binomial", mp.posterior(3.0), Proposal::independence_uniform(0.2, 0.8), g);
}

inline GridPair ising_n2(std::size_t K = 20) {
  auto model = make_ising(2, {{0, 1, 1.0}}, 0.0);
  GridSpec g;
  g.lo = -2.0;
  g.hi = 2.0;
  g.size = K;
  return make_pair("ising-n2", PosteriorSpec(model, Prior::gaussian(0.0, 1.0), 3.0),
                   Proposal::random_walk_gaussian(0.5), g);
}

inline GridPair ergm_n3(std::size_t K = 25) {
  auto model = make_ergm(3, GraphStatistic::edge_count);
  GridSpec g;
  g.lo = -2.0;
  g.hi = 2.0;
  g.size = K;
  return make_pair("ergm-n3", PosteriorSpec(model, Prior::gaussian(0.0, 1.0), 7.0),
                   Proposal::random_walk_gaussian(0.5), g);
}

inline GridPair poisson_gamma(std::size_t K = 61) {
  const auto prior = Prior::gamma(2.0, 1.0);
  GridSpec g;
  g.size = K;
  return make_pair("poisson-gamma", PosteriorSpec(make_poisson(prior), prior, 3.0),
                   Proposal::random_walk_gaussian(1.0), g);
}

inline std::vector<GridPair> suite() {
  return {two_point(), beta_binomial(), ising_n2(), ergm_n3(), poisson_gamma()};
}

}  // namespace exmc::fixtures
