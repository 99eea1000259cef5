#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "../support/problems.hpp"
#include "exmc/errors.hpp"
#include "exmc/kernel.hpp"
#include "exmc/stats.hpp"
#include "exmc/trace.hpp"

using namespace exmc;

TEST(Proposal, RandomWalksAreSymmetricAndTranslationInvariant) {
  const Proposal qs[] = {Proposal::random_walk_gaussian(0.7), Proposal::random_walk_uniform(1.5),
                         Proposal::random_walk_cauchy(0.3)};
  for (const auto& q : qs) {
    EXPECT_TRUE(q.symmetric());
    for (auto [a, b] : {std::pair{0.0, 0.4}, {-3.0, -2.1}, {1.0, 2.2}}) {
      EXPECT_DOUBLE_EQ(q.log_q(a, b), q.log_q(b, a)) << q.label();
      EXPECT_NEAR(q.log_q(a + 5.0, b + 5.0), q.log_q(a, b), 1e-12) << q.label();
    }
  }
  EXPECT_NEAR(Proposal::random_walk_gaussian(1.0).log_q(0, 1), -0.5 - 0.5 * std::log(2 * M_PI),
              1e-14);
  EXPECT_NEAR(Proposal::random_walk_uniform(1.5).log_q(0, 1), -std::log(3.0), 1e-14);
  EXPECT_EQ(Proposal::random_walk_uniform(1.5).log_q(0, 2), -INFINITY);
  EXPECT_NEAR(Proposal::random_walk_cauchy(2.0).log_q(0, 2), -std::log(2 * M_PI * 2.0), 1e-14);
}

TEST(Proposal, GaussianIncrementsAreNormal) {
  const auto q = Proposal::random_walk_gaussian(0.5);
  RngStream rng(3);
  std::vector<double> z;
  for (int i = 0; i < 20000; ++i) z.push_back((q.sample(1.0, rng) - 1.0) / 0.5);
  EXPECT_GT(ks_test_standard_normal(z).p_value, 0.001);
}

TEST(Proposal, DiscreteFamilies) {
  const auto u = Proposal::discrete_uniform({0.0, 1.0, 2.0});
  EXPECT_NEAR(u.log_q(0.0, 2.0), std::log(0.5), 1e-15);
  EXPECT_EQ(u.log_q(1.0, 1.0), -INFINITY);
  EXPECT_THROW(u.index_of(0.5), std::domain_error);

  const auto m = Proposal::discrete_matrix({0.0, 1.0}, {{0.2, 0.8}, {0.5, 0.5}});
  EXPECT_FALSE(m.symmetric());
  EXPECT_NEAR(m.probability(0, 1), 0.8, 1e-15);
  RngStream rng(9);
  int ones = 0;
  for (int i = 0; i < 10000; ++i) ones += m.sample(0.0, rng) == 1.0;
  EXPECT_NEAR(ones / 10000.0, 0.8, 0.02);

  EXPECT_THROW(Proposal::discrete_matrix({0.0, 1.0}, {{0.2, 0.7}, {0.5, 0.5}}),
               std::invalid_argument);
  EXPECT_THROW(Proposal::discrete_matrix({1.0, 0.0}, {{0.5, 0.5}, {0.5, 0.5}}),
               std::invalid_argument);
  EXPECT_THROW(Proposal::discrete_matrix({0.0, 1.0}, {{-0.5, 1.5}, {0.5, 0.5}}),
               std::invalid_argument);
}

TEST(Acceptance, TwoPointByHand) {
  const auto tp = make_two_point_bernoulli();
  const auto post = tp.posterior();
  const auto q = Proposal::discrete_uniform({0.25, 0.75});
  // Posterior is uniform and q symmetric.
  EXPECT_DOUBLE_EQ(mh_acceptance(0.25, 0.75, post, q), 1.0);
  // prior .75/.25, f_t(1) = t, f_t(0) = 1 - t.
  const double a1 = (0.25 * 0.75 * 0.25) / (0.75 * 0.25 * 0.75);
  EXPECT_NEAR(exchange_acceptance(0.25, 0.75, 1.0, post.z_blind(), q), a1, 1e-15);
  EXPECT_DOUBLE_EQ(exchange_acceptance(0.25, 0.75, 0.0, post.z_blind(), q), 1.0);
  EXPECT_DOUBLE_EQ(exchange_acceptance(0.75, 0.75, 0.0, post.z_blind(), q), 1.0);
}

TEST(Acceptance, ExponentialByHand) {
  const auto mp = make_exponential_gamma();
  const auto post = mp.posterior(1.0);
  const auto q = Proposal::random_walk_gaussian(1.0);
  const double t = 1.3;
  const double tp = 2.1;
  const double w = 0.4;
  // Exp(1) prior, f_t(x) = t exp(-t x) with Z = 1 hidden.
  const double log_a = (-tp + std::log(tp) - tp * 1.0 + std::log(t) - t * w) -
                       (-t + std::log(t) - t * 1.0 + std::log(tp) - tp * w);
  EXPECT_NEAR(exchange_acceptance(t, tp, w, post.z_blind(), q), std::min(1.0, std::exp(log_a)),
              1e-14);
  const double log_mh = (std::log(tp) - 2 * tp) - (std::log(t) - 2 * t);
  EXPECT_NEAR(mh_acceptance(t, tp, post, q), std::min(1.0, std::exp(log_mh)), 1e-14);
  EXPECT_EQ(mh_acceptance(t, -0.5, post, q), 0.0);
  EXPECT_EQ(exchange_acceptance(t, -0.5, w, post.z_blind(), q), 0.0);
  EXPECT_THROW(mh_acceptance(-0.5, t, post, q), UndefinedDensityError);
  EXPECT_THROW(exchange_acceptance(-0.5, t, w, post.z_blind(), q), UndefinedDensityError);
}

TEST(Kernel, LazinessValidated) {
  const auto tp = make_two_point_bernoulli();
  const auto q = Proposal::discrete_uniform({0.25, 0.75});
  EXPECT_THROW(KernelSpec(Algorithm::exchange, q, tp.posterior(), 0.0), std::invalid_argument);
  EXPECT_THROW(KernelSpec(Algorithm::exchange, q, tp.posterior(), 1.2), std::invalid_argument);
  EXPECT_DOUBLE_EQ(KernelSpec(Algorithm::mh, q, tp.posterior()).with_laziness(0.3).laziness(), 0.3);
}

TEST(Kernel, SameSeedSameTrace) {
  const auto mp = make_exponential_gamma();
  const KernelSpec spec(Algorithm::exchange, Proposal::random_walk_gaussian(0.5), mp.posterior(1.0));
  const auto a = run_chain(spec, 1.0, 2000, 77);
  const auto b = run_chain(spec, 1.0, 2000, 77);
  const auto c = run_chain(spec, 1.0, 2000, 78);
  EXPECT_EQ(a.states, b.states);
  EXPECT_EQ(a.outcomes, b.outcomes);
  EXPECT_NE(a.states, c.states);
  EXPECT_EQ(a.states.size(), 2001u);
  for (std::size_t i = 0; i < a.steps(); ++i) {
    if (a.outcomes[i] == StepOutcome::accepted) EXPECT_TRUE(a.aux[i].has_value());
  }
}

TEST(Kernel, LazyChainReplaysTheActiveMoves) {
  const auto mp = make_exponential_gamma();
  const auto q = Proposal::random_walk_gaussian(0.5);
  const KernelSpec eager(Algorithm::exchange, q, mp.posterior(1.0));
  const auto lazy_spec = eager.with_laziness(0.4);
  const auto lazy = run_chain(lazy_spec, 1.0, 5000, 123);
  const auto full = run_chain(eager, 1.0, 5000, 123);
  std::vector<double> active{lazy.states.front()};
  std::size_t held = 0;
  for (std::size_t i = 0; i < lazy.steps(); ++i) {
    if (lazy.held(i)) {
      ++held;
      EXPECT_EQ(lazy.states[i + 1], lazy.states[i]);
    } else {
      active.push_back(lazy.states[i + 1]);
    }
  }
  ASSERT_LT(active.size(), full.states.size());
  for (std::size_t i = 0; i < active.size(); ++i) ASSERT_EQ(active[i], full.states[i]) << i;
  // Held count ~ Binomial(5000, 0.6).
  EXPECT_NEAR(held / 5000.0, 0.6, 5 * std::sqrt(0.24 / 5000));
}

TEST(Kernel, OneStepFrequenciesMatchMatrixRows) {
  const auto bb = fixtures::beta_binomial(11);
  for (const auto alg : {Algorithm::mh, Algorithm::exchange}) {
    const KernelSpec spec(alg, bb.problem.proposal, bb.problem.posterior);
    const auto& P = alg == Algorithm::mh ? bb.mh.P : bb.ex.P;
    for (std::size_t i : {0u, 5u, 10u}) {
      ChainRng rng(mix_seed(99, i));
      std::vector<double> counts(11, 0.0);
      for (int n = 0; n < 50000; ++n) {
        const auto r = step(spec, bb.mh.grid[i], rng);
        counts[bb.problem.proposal.index_of(r.theta)] += 1.0;
      }
      std::vector<double> row(P.cols());
      for (Eigen::Index k = 0; k < P.cols(); ++k) row[k] = P(i, k);
      EXPECT_GT(chi_square_test(counts, row).p_value, 0.001) << to_string(alg) << " row " << i;
    }
  }
}

TEST(Kernel, DetailedBalanceOfMatrices) {
  for (const auto& pair : fixtures::suite()) {
    for (const auto* c : {&pair.mh, &pair.ex}) {
      const auto r = residuals(*c);
      EXPECT_LT(r.row_sum, 1e-12) << pair.name;
      EXPECT_LT(r.reversibility, 1e-12) << pair.name;
      EXPECT_LT(r.stationarity, 1e-10) << pair.name;
    }
  }
}

TEST(Trace, CsvAndSidecar) {
  const auto tp = make_two_point_bernoulli();
  const KernelSpec spec(Algorithm::exchange, Proposal::discrete_uniform({0.25, 0.75}),
                        tp.posterior(), 0.5);
  const auto t = run_chain(spec, 0.25, 3, 4);
  std::ostringstream csv;
  write_trace_csv(t, csv);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "step,theta,accepted,held");
  std::getline(lines, line);
  EXPECT_EQ(line, "0,0.25,0,0");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);

  const auto a = trace_sidecar_json(t, "name x\n", "exchange");
  EXPECT_EQ(a, trace_sidecar_json(t, "name x\n", "exchange"));
  EXPECT_NE(a, trace_sidecar_json(t, "name y\n", "exchange"));
  EXPECT_NE(a.find("\"config_hash\""), std::string::npos);
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
}
