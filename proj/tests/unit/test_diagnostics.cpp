#include <gtest/gtest.h>

#include <cmath>

#include "../support/problems.hpp"
#include "exmc/bound_check.hpp"
#include "exmc/conditions.hpp"
#include "exmc/divergence.hpp"
#include "exmc/errors.hpp"
#include "exmc/kernel.hpp"
#include "exmc/output_analysis.hpp"
#include "exmc/rejection.hpp"
#include "exmc/spectrum.hpp"

using namespace exmc;

namespace {

double poisson_tv(double a, double b) {
  double s = 0;
  double la = -a;
  double lb = -b;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      la += std::log(a) - std::log(k);
      lb += std::log(b) - std::log(k);
    }
    s += std::abs(std::exp(la) - std::exp(lb));
  }
  return 0.5 * s;
}

// Single-edge Ising: P(T = 1) = e^t / (e^t + e^-t).
double ising2_tv(double a, double b) {
  auto p = [](double t) { return 1 / (1 + std::exp(-2 * t)); };
  return std::abs(p(a) - p(b));
}

}  // namespace

TEST(Tv, GaussianLocationClosedForm) {
  GaussianLocationModel g;
  EXPECT_NEAR(tv_distance(g, 0.0, 1.0), std::erf(0.5 / std::sqrt(2.0)), 1e-10);
  EXPECT_NEAR(tv_distance(g, 0.0, 1.0), 0.38292492254802624, 1e-10);
  EXPECT_NEAR(tv_distance_overlap(g, 0.0, 1.0), 0.38292492254802624, 1e-9);
  EXPECT_EQ(tv_distance(g, 0.3, 0.3), 0.0);
}

TEST(Tv, SymmetryAndTriangle) {
  const ModelPtr models[] = {std::make_shared<PoissonModel>(),
                             make_ising(2, {{0, 1, 1.0}}, 0.0),
                             std::make_shared<ExponentialModel>()};
  RngStream rng(8);
  for (const auto& m : models) {
    for (int i = 0; i < 10; ++i) {
      const double a = 0.1 + 3 * rng.uniform();
      const double b = 0.1 + 3 * rng.uniform();
      const double c = 0.1 + 3 * rng.uniform();
      EXPECT_EQ(tv_distance(*m, a, b), tv_distance(*m, b, a)) << m->name();
      EXPECT_LE(tv_distance(*m, a, c), tv_distance(*m, a, b) + tv_distance(*m, b, c) + 1e-10);
      EXPECT_NEAR(tv_distance(*m, a, b), tv_distance_overlap(*m, a, b), 1e-9) << m->name();
    }
  }
}

TEST(Tv, EnumeratedOracles) {
  PoissonModel p;
  auto ising = make_ising(2, {{0, 1, 1.0}}, 0.0);
  for (auto [a, b] : {std::pair{0.5, 0.6}, {2.0, 4.0}, {5.0, 5.1}}) {
    EXPECT_NEAR(tv_distance(p, a, b), poisson_tv(a, b), 1e-12);
    EXPECT_NEAR(tv_distance(*ising, a - 2, b - 2), ising2_tv(a - 2, b - 2), 1e-12);
  }
}

TEST(Tv, ModulusChecks) {
  PoissonModel p;
  const double thetas[] = {0.5, 1, 2, 5};
  const double shifts[] = {0.1, 0.5, 1, 2};
  const auto r = tv_modulus_check(p, TvModulus::poisson_coupling, thetas, shifts);
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.lhs.size(), 16u);
  EXPECT_NEAR(tv_modulus(p, TvModulus::poisson_coupling, 0.5), -std::expm1(-0.5), 1e-15);

  GaussianLocationModel g;
  const double gt[] = {-2, 0, 1.5};
  const auto rg = tv_modulus_check(g, TvModulus::location_profile, gt, shifts);
  EXPECT_TRUE(rg.satisfied);
  EXPECT_LT(std::abs(rg.worst_margin), 1e-10);

  auto ergm = make_ergm(4, GraphStatistic::edge_count);
  EXPECT_NEAR(tv_modulus(*ergm, TvModulus::pinsker_expfam, 0.5), std::sqrt(2.0) * 6 / 2 * std::sqrt(0.5),
              1e-14);
  EXPECT_THROW(tv_modulus(p, TvModulus::pinsker_expfam, 0.5), ModelMismatchError);
  EXPECT_THROW(tv_modulus(g, TvModulus::poisson_coupling, 0.5), ModelMismatchError);
}

TEST(Kl, IdentityAndPinskerChain) {
  auto ising = make_ising(2, {{0, 1, 1.0}}, 0.0);
  EXPECT_NEAR(kl_divergence(*ising, 0.4, 0.4), 0.0, 1e-15);
  const auto s = symmetrized_kl_identity(*ising, 0.0, 1.0);
  EXPECT_TRUE(s.holds);
  EXPECT_NEAR(s.identity, std::tanh(1.0), 1e-12);
  EXPECT_NEAR(s.kl_sum, std::tanh(1.0), 1e-10);

  auto ergm = make_ergm(3, GraphStatistic::edge_count);
  std::vector<std::pair<double, double>> pairs;
  RngStream rng(4);
  for (int i = 0; i < 30; ++i) pairs.emplace_back(4 * rng.uniform() - 2, 4 * rng.uniform() - 2);
  EXPECT_TRUE(pinsker_chain_check(*ergm, pairs).satisfied);
  EXPECT_TRUE(pinsker_chain_check(*ising, pairs).satisfied);

  GaussianLocationModel g;
  EXPECT_NEAR(kl_divergence(g, 0.0, 1.5), 1.125, 1e-9);
}

TEST(NonNegligibility, TrivialAndMonotone) {
  BinomialModel m(10, ParamSpace::interval(0.2, 0.8));
  EXPECT_NEAR(non_negligible_mass(m, 0.4, 0.4, 0.5), 1.0, 1e-12);
  double prev = 1.0;
  for (double d : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double p = non_negligible_mass(m, 0.25, 0.7, d);
    EXPECT_LE(p, prev + 1e-15);
    prev = p;
  }
  EXPECT_THROW(non_negligibility(m, 1.5, std::vector<double>{0.3, 0.5}), std::invalid_argument);
}

TEST(NonNegligibility, ExponentialClosedFormAndDecay) {
  ExponentialModel m;
  // p_1(x) > d p_t(x)  <=>  x > log(d t) / (t - 1) for t > 1.
  auto oracle = [](double t, double d) { return std::exp(-t * std::log(d * t) / (t - 1)); };
  double prev = 1.0;
  for (double t : {10.0, 100.0, 1000.0}) {
    const double p = non_negligible_mass(m, 1.0, t, 0.5);
    EXPECT_NEAR(p, oracle(t, 0.5), 1e-9 + 1e-6 * p);
    EXPECT_LT(p, prev);
    prev = p;
  }
  EXPECT_LT(prev, 0.01);
}

TEST(NonNegligibility, BetaBinomialPositive) {
  BinomialModel m(10, ParamSpace::interval(0.2, 0.8));
  std::vector<double> thetas;
  for (int i = 0; i < 20; ++i) thetas.push_back(0.2 + 0.6 * i / 19.0);
  const auto r = non_negligibility(m, 0.5, thetas);
  EXPECT_TRUE(r.positive());
  EXPECT_EQ(r.pairs.size(), 380u);  // ordered pairs, diagonal excluded
  EXPECT_GT(r.infimum, 0.01);
}

TEST(Tail, PosteriorChecks) {
  const auto eg = make_exponential_gamma();
  const auto r = tail_condition_check(eg.posterior(1.0));
  EXPECT_TRUE(r.passes());
  EXPECT_GE(r.best_alpha(), 1.0);
  EXPECT_LT(r.best_alpha(), 2.0);
  const auto& passing = r.right.passing_alphas;
  EXPECT_TRUE(std::any_of(passing.begin(), passing.end(),
                          [](double a) { return std::abs(a - 1.0) < 1e-9; }));

  const auto gl = make_gaussian_location(2.0);
  const auto rg = tail_condition_check(gl.posterior(1.0));
  EXPECT_TRUE(rg.passes());
  EXPECT_TRUE(rg.two_sided);
  EXPECT_NEAR(rg.best_alpha(), 100.0, 1e-9);

  auto cauchy = [](double t) { return -std::log1p(t * t); };
  EXPECT_FALSE(tail_condition_check(cauchy, ParamSpace::real_line()).passes());
}

TEST(Tail, ProposalTails) {
  const auto g = proposal_tail_check(Proposal::random_walk_gaussian(1.0), 1.0);
  EXPECT_TRUE(g.bounded);
  EXPECT_NEAR(g.b, std::exp(0.5) / std::sqrt(2 * M_PI), 1e-10);
  EXPECT_NEAR(g.argmax, 1.0, 1e-6);
  EXPECT_TRUE(proposal_tail_check(Proposal::random_walk_uniform(1.0), 3.0).bounded);
  EXPECT_FALSE(proposal_tail_check(Proposal::random_walk_cauchy(1.0), 1.0).bounded);
}

TEST(Rejection, W0) {
  EXPECT_NEAR(exchange_w0(1.0, 2.0), std::log(2.0), 1e-15);
  EXPECT_NEAR(exchange_w0(2.0, 2.0 + 1e-10), 0.5, 1e-9);
  EXPECT_NEAR(exchange_w0(3.0, 3.0), 1.0 / 3.0, 1e-15);
}

TEST(Rejection, ExponentialGammaTable) {
  const auto eg = make_exponential_gamma();
  const auto q = Proposal::independence_gamma(2.0, 2.0);
  const double thetas[] = {1, 10, 100, 1000};
  // scipy dblquad of the closed-form move density.
  const double expected[] = {0.22043616870584182, 0.7191575735380105, 0.94748460857578,
                             0.9923522277677184};
  const auto t = rejection_table(eg.posterior(1.0), q, thetas);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(t.values[i], expected[i], 1e-7) << thetas[i];
  EXPECT_TRUE(t.strictly_increasing);
}

TEST(Rejection, TwoPoint) {
  const auto tp = make_two_point_bernoulli();
  const auto q = Proposal::discrete_uniform({0.25, 0.75});
  EXPECT_NEAR(rejection_probability(tp.posterior(), q, 0.25), 0.5, 1e-14);
  EXPECT_NEAR(rejection_probability(tp.posterior(), q, 0.75), 0.5, 1e-14);
}

TEST(Rejection, MatchesMatrixDiagonal) {
  const auto bb = fixtures::beta_binomial(11);
  for (std::size_t i = 0; i < 11; ++i) {
    EXPECT_NEAR(rejection_probability(bb.problem.posterior, bb.problem.proposal, bb.ex.grid[i]),
                bb.ex.P(i, i), 1e-12);
  }
}

TEST(BatchMeans, Basics) {
  std::vector<double> constant(10000, 3.0);
  EXPECT_NEAR(batch_means_variance(constant, 50), 0.0, 1e-20);
  EXPECT_THROW(batch_means_variance(std::vector<double>(99, 1.0), 10), TooShortTraceError);
  RngStream rng(2);
  std::vector<double> iid;
  for (int i = 0; i < 400000; ++i) iid.push_back(rng.normal());
  EXPECT_NEAR(batch_means_variance(iid, 100), 1.0, 0.2);
}

TEST(Clt, TwoPointChains) {
  const auto tp = fixtures::two_point();
  auto h = [](double t) { return t < 0.5 ? -1.0 : 1.0; };
  CltOptions o;
  o.replications = 500;
  o.steps = 2000;
  o.seed = 17;
  const KernelSpec ex(Algorithm::exchange, tp.problem.proposal, tp.problem.posterior);
  const auto r = clt_check(ex, h, o);
  EXPECT_EQ(r.status, CltStatus::passed);
  EXPECT_NEAR(r.sigma2, 1.0, 1e-12);
  const KernelSpec mh(Algorithm::mh, tp.problem.proposal, tp.problem.posterior);
  const auto d = clt_check(mh, h, o);
  EXPECT_EQ(d.status, CltStatus::degenerate);
  EXPECT_TRUE(d.passes());
  EXPECT_LE(d.max_abs_scaled_sum, 1.0 / std::sqrt(2000.0) + 1e-12);
}

TEST(Clt, KernelMatrixMatchesBuilders) {
  const auto bb = fixtures::beta_binomial(11);
  const KernelSpec ex(Algorithm::exchange, bb.problem.proposal, bb.problem.posterior, 0.5);
  const auto lazy = kernel_matrix(ex);
  EXPECT_LT((lazy.P - lazy_matrix(bb.ex, 0.5).P).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(FrequencyTest, GridChainMarginals) {
  const auto bb = fixtures::beta_binomial(11);
  const KernelSpec ex(Algorithm::exchange, bb.problem.proposal, bb.problem.posterior);
  const auto trace = run_chain(ex, bb.ex.grid[5], 200000, 31);
  const auto f = marginal_frequency_test(trace, bb.ex);
  EXPECT_TRUE(f.passes()) << f.fit.p_value;
  EXPECT_GE(f.thin, 1u);
  const auto tp = fixtures::two_point();
  const auto t2 = run_chain(KernelSpec(Algorithm::mh, tp.problem.proposal, tp.problem.posterior),
                            0.25, 100, 1);
  EXPECT_THROW(marginal_frequency_test(t2, tp.mh), std::invalid_argument);
}

TEST(BoundCheck, JsonRecord) {
  const auto r = make_bound_check("demo", {{1.0, 2.0}, {3.0, 4.0}}, {0.1, 0.5}, {0.2, 0.4}, 0.0);
  EXPECT_FALSE(r.satisfied);
  EXPECT_NEAR(r.worst_margin, -0.1, 1e-15);
  const auto j = to_json(r);
  for (const char* key : {"\"claim_id\"", "\"evaluation_points\"", "\"lhs\"", "\"rhs\"",
                          "\"satisfied\"", "\"worst_margin\""}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
}
