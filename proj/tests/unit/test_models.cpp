#include <gtest/gtest.h>

#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <map>

#include "exmc/errors.hpp"
#include "exmc/model.hpp"
#include "exmc/posterior.hpp"
#include "exmc/quadrature.hpp"
#include "exmc/rng.hpp"
#include "exmc/sample_space.hpp"
#include "exmc/stats.hpp"
#include "exmc/zoo.hpp"

using namespace exmc;

namespace {

template <typename T>
concept HasLogZ = requires(const T& t) { t.log_Z(0.0); };

// The kernels only see Likelihood; it must not expose the normalizer.
static_assert(!HasLogZ<Likelihood>);
static_assert(HasLogZ<UnnormalizedModel>);
static_assert(std::is_same_v<decltype(std::declval<IntractablePosterior>().likelihood()),
                             const Likelihood&>);

double total_mass(const UnnormalizedModel& m, double theta) {
  const double t[] = {theta};
  return sample_space_total(m, t, [&](SamplePoint x) { return std::exp(m.log_p(theta, x)); });
}

// Chi-square of N exact draws against p_theta on an enumerable space.
double sampler_p_value(const UnnormalizedModel& m, double theta, std::size_t cells,
                       std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<double> counts(cells + 1, 0.0);
  constexpr std::size_t N = 100000;
  for (std::size_t i = 0; i < N; ++i) {
    const auto x = static_cast<std::size_t>(m.draw(theta, rng));
    counts[std::min(x, cells)] += 1.0;
  }
  std::vector<double> probs(cells + 1, 0.0);
  double head = 0.0;
  for (std::size_t x = 0; x < cells; ++x) {
    probs[x] = std::exp(m.log_p(theta, static_cast<double>(x)));
    head += probs[x];
  }
  probs[cells] = std::max(0.0, 1.0 - head);
  return chi_square_test(counts, probs).p_value;
}

}  // namespace

TEST(Normalization, EnumerableModelsSumToOne) {
  const ModelPtr models[] = {
      std::make_shared<BernoulliModel>(),
      std::make_shared<BinomialModel>(10),
      std::make_shared<PoissonModel>(),
      make_ising(2, {{0, 1, 1.0}}, 0.0),
      make_ising(4, {{0, 1, 1.0}, {1, 2, 0.5}, {2, 3, 1.0}, {3, 0, -0.7}}, 0.3),
      make_ergm(3, GraphStatistic::edge_count),
      make_ergm(4, GraphStatistic::triangle_count),
  };
  for (const auto& m : models) {
    for (double theta : {0.1, 0.5, 0.9}) {
      const double t = m->kind() == ModelKind::ising || m->kind() == ModelKind::ergm ? 2 * theta - 1
                                                                                      : theta;
      const double th = m->kind() == ModelKind::poisson ? 10 * theta : t;
      EXPECT_NEAR(total_mass(*m, th), 1.0, 1e-12) << m->name() << " at " << th;
    }
  }
}

TEST(Normalization, ContinuumModelsIntegrateToOne) {
  ExponentialModel e;
  GaussianLocationModel g;
  EXPECT_NEAR(total_mass(e, 2.5), 1.0, 1e-10);
  EXPECT_NEAR(total_mass(g, -0.7), 1.0, 1e-10);
  EXPECT_NEAR(g.log_Z(0.3), 0.5 * std::log(2 * M_PI), 1e-14);
}

TEST(Normalization, ClosedFormPartitionFunctions) {
  auto ising = make_ising(2, {{0, 1, 1.0}}, 0.0);
  auto edges3 = make_ergm(3, GraphStatistic::edge_count);
  auto edges4 = make_ergm(4, GraphStatistic::edge_count);
  auto tri3 = make_ergm(3, GraphStatistic::triangle_count);
  for (double th : {-1.5, 0.0, 0.4, 2.0}) {
    EXPECT_NEAR(ising->log_Z(th), std::log(4 * std::cosh(th)), 1e-12);
    EXPECT_NEAR(edges3->log_Z(th), 3 * std::log1p(std::exp(th)), 1e-12);
    EXPECT_NEAR(edges4->log_Z(th), 6 * std::log1p(std::exp(th)), 1e-12);
    EXPECT_NEAR(tri3->log_Z(th), std::log(7 + std::exp(th)), 1e-12);
  }
  EXPECT_EQ(*edges4->sufficient_stat_bound(), 6.0);
  EXPECT_EQ(*ising->sufficient_stat_bound(), 1.0);
}

TEST(Normalization, IsingHamiltonianMatchesSpins) {
  IsingModel m(3, {{0, 1, 1.0}, {1, 2, -2.0}}, 0.5);
  for (std::uint64_t k = 0; k < 8; ++k) {
    auto s = [&](int i) { return (k >> i) & 1 ? 1.0 : -1.0; };
    const double h = -(s(0) * s(1) - 2.0 * s(1) * s(2)) - 0.5 * (s(0) + s(1) + s(2));
    EXPECT_NEAR(m.hamiltonian(k), h, 1e-14);
    EXPECT_NEAR(*m.sufficient_stat(static_cast<double>(k)), -h, 1e-14);
  }
}

TEST(Sampler, ChiSquareOnEnumerableModels) {
  EXPECT_GT(sampler_p_value(BernoulliModel(), 0.3, 2, 11), 0.001);
  EXPECT_GT(sampler_p_value(BinomialModel(10), 0.35, 11, 12), 0.001);
  EXPECT_GT(sampler_p_value(PoissonModel(), 2.5, 12, 13), 0.001);
  EXPECT_GT(sampler_p_value(*make_ising(2, {{0, 1, 1.0}}, 0.0), 0.7, 4, 14), 0.001);
  EXPECT_GT(sampler_p_value(*make_ising(3, {{0, 1, 1.0}, {1, 2, 1.0}}, 0.2), -0.4, 8, 15),
            0.001);
  EXPECT_GT(sampler_p_value(*make_ergm(3, GraphStatistic::edge_count), -0.4, 8, 16), 0.001);
  EXPECT_GT(sampler_p_value(*make_ergm(4, GraphStatistic::triangle_count), 0.8, 64, 17), 0.001);
}

TEST(Sampler, ContinuumDrawsMatchByKs) {
  const boost::math::normal_distribution<> normal;
  RngStream rng(21);
  ExponentialModel e;
  GaussianLocationModel g;
  std::vector<double> ze;
  std::vector<double> zg;
  for (int i = 0; i < 20000; ++i) {
    const double x = e.draw(3.0, rng);
    ze.push_back(boost::math::quantile(normal, -std::expm1(-3.0 * x)));
    zg.push_back(g.draw(-1.2, rng) + 1.2);
  }
  EXPECT_GT(ks_test_standard_normal(ze).p_value, 0.001);
  EXPECT_GT(ks_test_standard_normal(zg).p_value, 0.001);
}

TEST(Sampler, DeterministicPerSeed) {
  BinomialModel m(10);
  RngStream a(5, 3);
  RngStream b(5, 3);
  RngStream c(6, 3);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double x = m.draw(0.4, a);
    EXPECT_EQ(x, m.draw(0.4, b));
    differs |= x != m.draw(0.4, c);
  }
  EXPECT_TRUE(differs);
}

TEST(Prior, FamiliesAndSupports) {
  const auto g = Prior::gamma(2.0, 3.0);
  EXPECT_EQ(g.log_density(-1.0), -INFINITY);
  EXPECT_NEAR(g.log_density(2.0) - g.log_density(1.0), std::log(2.0) - 3.0, 1e-12);

  const auto tb = Prior::truncated_beta(2.0, 2.0, 0.2, 0.8);
  EXPECT_EQ(tb.log_density(0.1), -INFINITY);
  EXPECT_NEAR(tb.log_density(0.5) - tb.log_density(0.3), std::log(0.25 / 0.21), 1e-12);

  const auto d = Prior::discrete({0.25, 0.75}, {3.0, 1.0});
  EXPECT_TRUE(d.support().is_finite());
  EXPECT_NEAR(d.log_density(0.25) - d.log_density(0.75), std::log(3.0), 1e-12);
  EXPECT_EQ(d.log_density(0.5), -INFINITY);

  const auto mix = Prior::mixture({0.5, 0.5}, {Prior::gaussian(-1, 1), Prior::gaussian(1, 1)});
  EXPECT_NEAR(mix.log_density(0.3), mix.log_density(-0.3), 1e-12);
  EXPECT_THROW(Prior::mixture({1.0}, {Prior::gaussian(0, 1), Prior::gamma(1, 1)}),
               std::invalid_argument);
  EXPECT_THROW(Prior::gamma(-1.0, 1.0), std::invalid_argument);
}

TEST(Prior, ConjugateExponentialFamily) {
  auto ising = make_ising(2, {{0, 1, 1.0}}, 0.0);
  const auto p = make_conjugate_prior(ising, 2.0, 0.3);
  for (double th : {-1.0, 0.5}) {
    EXPECT_NEAR(p.log_density(th) - p.log_density(0.0),
                2.0 * (0.3 * th - ising->log_Z(th) + ising->log_Z(0.0)), 1e-12);
  }
  EXPECT_THROW(make_conjugate_prior(ising, 2.0, 1.0), std::invalid_argument);
  EXPECT_THROW(make_conjugate_prior(std::make_shared<ExponentialModel>(), 1.0, 0.5),
               ModelMismatchError);
}

TEST(Posterior, TwoPointGridPosteriorIsUniform) {
  const auto tp = make_two_point_bernoulli();
  const auto w = tp.posterior().grid_posterior();
  ASSERT_EQ(w.size(), 2u);
  EXPECT_NEAR(w[0], 0.5, 1e-15);
  EXPECT_NEAR(w[1], 0.5, 1e-15);
}

TEST(Posterior, ExponentialGammaShape) {
  const auto mp = make_exponential_gamma();
  const auto post = mp.posterior(1.0);
  // Gamma(2, 2) log density up to a constant: log t - 2 t.
  for (double t : {0.1, 1.0, 7.0}) {
    EXPECT_NEAR(post.log_unnormalized(t) - post.log_unnormalized(1.0),
                std::log(t) - 2.0 * t + 2.0, 1e-12);
  }
  const auto blind = post.z_blind();
  EXPECT_NEAR(blind.log_target_without_normalizer(2.0), post.log_unnormalized(2.0), 1e-12);
}

TEST(Posterior, ZBlindTargetOmitsNormalizer) {
  auto ising = make_ising(2, {{0, 1, 1.0}}, 0.0);
  const PosteriorSpec post(ising, Prior::gaussian(0, 1), 3.0);
  const auto blind = post.z_blind();
  for (double th : {-1.0, 0.0, 0.8}) {
    EXPECT_NEAR(blind.log_target_without_normalizer(th) - post.log_unnormalized(th),
                ising->log_Z(th), 1e-12);
  }
}

TEST(Zoo, IsingEdgeParsing) {
  const auto e = parse_ising_edges("[[0,1,1],[1,2,-0.5]]");
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[1].i, 1);
  EXPECT_EQ(e[1].j, 2);
  EXPECT_EQ(e[1].coupling, -0.5);
  EXPECT_THROW(parse_ising_edges("[[0,1"), std::invalid_argument);
  EXPECT_THROW(make_ising(2, parse_ising_edges("[[0,0,1]]"), 0.0), std::invalid_argument);
  EXPECT_THROW(make_ising(25, {}, 0.0), BudgetError);
}
