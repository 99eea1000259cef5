#include "exmc/matrices.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "exmc/errors.hpp"
#include "exmc/parallel.hpp"
#include "exmc/sample_space.hpp"

namespace exmc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct GridSetup {
  std::vector<double> grid;
  Eigen::VectorXd log_target;
  Eigen::VectorXd pi;
};

GridSetup setup(const PosteriorSpec& posterior, const Proposal& proposal) {
  const auto& support = posterior.prior().support();
  if (!support.is_finite()) {
    throw GridMismatchError("matrix construction needs a discrete posterior; discretize first");
  }
  if (!proposal.is_discrete() || proposal.points() != support.points()) {
    throw GridMismatchError("proposal points do not match the posterior grid");
  }
  GridSetup s;
  s.grid = support.points();
  const auto k = static_cast<Eigen::Index>(s.grid.size());
  s.log_target.resize(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double v = posterior.log_unnormalized(s.grid[static_cast<std::size_t>(i)]);
    if (v == kNegInf) {
      throw UndefinedDensityError("grid state " + std::to_string(s.grid[static_cast<std::size_t>(i)]) +
                                  " has zero posterior mass");
    }
    s.log_target(i) = v;
  }
  s.pi = (s.log_target.array() - s.log_target.maxCoeff()).exp();
  s.pi /= s.pi.sum();
  return s;
}

void fill_diagonal(Eigen::MatrixXd& P) {
  for (Eigen::Index i = 0; i < P.rows(); ++i) {
    double off = 0.0;
    for (Eigen::Index j = 0; j < P.cols(); ++j) {
      if (j != i) off += P(i, j);
    }
    P(i, i) = std::max(0.0, 1.0 - off);
  }
}

}  // namespace

FiniteChain build_mh_matrix(const PosteriorSpec& posterior, const Proposal& proposal) {
  auto s = setup(posterior, proposal);
  const auto k = static_cast<Eigen::Index>(s.grid.size());
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      const double qij = proposal.probability(ui, uj);
      if (qij == 0.0) continue;
      const double qji = proposal.probability(uj, ui);
      const double log_r =
          s.log_target(j) + std::log(qji) - s.log_target(i) - std::log(qij);
      P(i, j) = qij * std::exp(std::min(0.0, log_r));
    }
  }
  fill_diagonal(P);
  return {std::move(s.grid), std::move(P), std::move(s.pi), {}, "mh"};
}

FiniteChain build_exchange_matrix(const PosteriorSpec& posterior, const Proposal& proposal,
                                  unsigned threads) {
  auto s = setup(posterior, proposal);
  const auto& model = posterior.model();
  const auto& prior = posterior.prior();
  const double x = posterior.data();
  const std::size_t k = s.grid.size();

  if (model.sample_space().enumerable()) {
    const double cells = static_cast<double>(model.support_classes(s.grid).size());
    const double work = static_cast<double>(k) * static_cast<double>(k) * cells;
    if (work > kExchangeBudget) {
      throw BudgetError("exchange matrix needs " + std::to_string(work) +
                        " sample-space terms, above the budget of " +
                        std::to_string(kExchangeBudget));
    }
  }

  std::vector<double> log_prior(k);
  std::vector<double> log_fx(k);
  for (std::size_t i = 0; i < k; ++i) {
    log_prior[i] = prior.log_density(s.grid[i]);
    log_fx[i] = model.log_f(s.grid[i], x);
  }

  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  parallel_for(k, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const double qij = proposal.probability(i, j);
      if (qij == 0.0) continue;
      const double qji = proposal.probability(j, i);
      const double log_c = log_prior[j] + std::log(qji) + log_fx[j] - log_prior[i] -
                           std::log(qij) - log_fx[i];
      P(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          qij * expected_capped_ratio(model, s.grid[i], s.grid[j], log_c);
    }
  });
  fill_diagonal(P);
  return {std::move(s.grid), std::move(P), std::move(s.pi), {}, "exchange"};
}

FiniteChain build_mh_matrix(const DiscretizedProblem& problem) {
  auto chain = build_mh_matrix(problem.posterior, problem.proposal);
  chain.weights = problem.weights;
  return chain;
}

FiniteChain build_exchange_matrix(const DiscretizedProblem& problem, unsigned threads) {
  auto chain = build_exchange_matrix(problem.posterior, problem.proposal, threads);
  chain.weights = problem.weights;
  return chain;
}

}  // namespace exmc
