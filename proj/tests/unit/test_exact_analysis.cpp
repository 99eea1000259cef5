#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "../support/problems.hpp"
#include "exmc/comparison.hpp"
#include "exmc/errors.hpp"
#include "exmc/sample_space.hpp"
#include "exmc/spectrum.hpp"

using namespace exmc;

namespace {

// sigma^2 = 2 <h, Z h>_pi - <h, h>_pi with Z = (I - P + 1 pi^T)^{-1}, h centered.
double fundamental_matrix_variance(const FiniteChain& c, const std::vector<double>& h) {
  const Eigen::Index K = c.P.rows();
  Eigen::VectorXd hv = Eigen::Map<const Eigen::VectorXd>(h.data(), K);
  hv.array() -= c.pi.dot(hv);
  const Eigen::MatrixXd A =
      Eigen::MatrixXd::Identity(K, K) - c.P + Eigen::VectorXd::Ones(K) * c.pi.transpose();
  const Eigen::VectorXd z = A.partialPivLu().solve(hv);
  const Eigen::VectorXd w = c.pi.cwiseProduct(hv);
  return 2 * w.dot(z) - w.dot(hv);
}

FiniteChain three_cycle() {
  FiniteChain c;
  c.grid = {0, 1, 2};
  c.P.resize(3, 3);
  c.P << 0.1, 0.6, 0.3, 0.3, 0.1, 0.6, 0.6, 0.3, 0.1;
  c.pi = Eigen::VectorXd::Constant(3, 1.0 / 3);
  return c;
}

}  // namespace

TEST(Matrices, TwoPointExact) {
  const auto tp = fixtures::two_point();
  Eigen::Matrix2d mh;
  mh << 0, 1, 1, 0;
  Eigen::Matrix2d ex;
  ex << 0.5, 0.5, 0.5, 0.5;
  EXPECT_LT((tp.mh.P - mh).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((tp.ex.P - ex).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(tp.ex.pi(0), 0.5, 1e-15);
}

TEST(Matrices, GridMismatchAndBudget) {
  const auto tp = make_two_point_bernoulli();
  EXPECT_THROW(build_mh_matrix(tp.posterior(), Proposal::discrete_uniform({0.25, 0.5})),
               GridMismatchError);
  const auto mp = make_exponential_gamma();
  GridSpec g;
  g.size = GridSpec::kMaxSize + 1;
  EXPECT_THROW(discretize(mp.posterior(1.0), Proposal::random_walk_gaussian(1.0), g), BudgetError);
  const auto a = fixtures::two_point();
  const auto b = fixtures::beta_binomial(11);
  EXPECT_THROW(peskun_compare(a.mh, b.ex), GridMismatchError);
}

TEST(Matrices, TrapezoidWeights) {
  const auto bb = fixtures::beta_binomial(11);
  double s = 0;
  for (double w : bb.problem.weights) s += w;
  EXPECT_NEAR(s, 0.6, 1e-14);
  EXPECT_NEAR(bb.problem.weights.front(), 0.03, 1e-14);
  EXPECT_NEAR(bb.problem.weights[1], 0.06, 1e-14);
}

TEST(Matrices, ExponentialCappedRatioClosedForm) {
  ExponentialModel m;
  // E_{w ~ Exp(b)} min(1, c * a e^{-a w} / (b e^{-b w})), by an independent
  // crossing-point formula.
  auto oracle = [](double a, double b, double c) {
    const double k = std::log(c * a / b);
    const double d = b - a;
    const double ws = -k / d;  // c a/b e^{d w} = 1
    if (d > 0) {               // ratio increasing in w
      if (ws <= 0) return 1.0;
      return c * a / b * b / (b - d) * (-std::expm1(-(b - d) * ws)) + std::exp(-b * ws);
    }
    if (ws <= 0) return std::min(1.0, c * a / b * b / (b - d));
    return -std::expm1(-b * ws) + c * a / b * b / (b - d) * std::exp(-(b - d) * ws);
  };
  for (auto [a, b, c] : {std::tuple{1.0, 2.0, 1.0}, {2.0, 1.0, 0.7}, {1.0, 3.0, 4.0},
                         {3.0, 1.0, 0.2}, {0.5, 0.6, 1.0}}) {
    EXPECT_NEAR(expected_capped_ratio(m, a, b, std::log(c)), oracle(a, b, c), 1e-9)
        << a << " " << b << " " << c;
  }
}

TEST(Spectrum, TwoPointEigenvalues) {
  const auto tp = fixtures::two_point();
  const auto mh = spectrum(tp.mh);
  const auto ex = spectrum(tp.ex);
  EXPECT_NEAR(mh.eigenvalues[0], -1.0, 1e-12);
  EXPECT_NEAR(mh.eigenvalues[1], 1.0, 1e-12);
  EXPECT_NEAR(mh.M, -1.0, 1e-12);
  EXPECT_NEAR(ex.M, 0.0, 1e-12);
  EXPECT_NEAR(ex.gap, 1.0, 1e-12);
}

TEST(Spectrum, NonReversibleRejected) {
  EXPECT_THROW(spectrum(three_cycle()), NonReversibleError);
}

TEST(Spectrum, VarianceMatchesFundamentalMatrix) {
  for (const auto& pair : fixtures::suite()) {
    for (const auto* c : {&pair.mh, &pair.ex}) {
      for (auto fn : {+[](double t) { return t; }, +[](double t) { return t * t; }}) {
        const auto h = evaluate_on_grid(*c, fn);
        const double s = asymptotic_variance_exact(*c, h);
        if (pair.name == "two-point" && c == &pair.mh) {
          EXPECT_NEAR(s, 0.0, 1e-12);
          continue;
        }
        EXPECT_NEAR(s, fundamental_matrix_variance(*c, h), 1e-8 * std::max(1.0, s)) << pair.name;
      }
    }
  }
}

TEST(Spectrum, TwoPointVariances) {
  const auto tp = fixtures::two_point();
  const auto h = evaluate_on_grid(tp.ex, [](double t) { return t < 0.5 ? -1.0 : 1.0; });
  EXPECT_NEAR(asymptotic_variance_exact(tp.ex, h), 1.0, 1e-12);
  EXPECT_NEAR(stationary_variance(tp.ex, h), 1.0, 1e-12);
  EXPECT_NEAR(asymptotic_variance_exact(tp.mh, h), 0.0, 1e-12);
  const std::vector<double> constant{2.0, 2.0};
  EXPECT_EQ(asymptotic_variance_exact(tp.ex, constant), 0.0);
}

TEST(Spectrum, ReducibleChainDiverges) {
  FiniteChain c;
  c.grid = {0, 1};
  c.P = Eigen::Matrix2d::Identity();
  c.pi = Eigen::Vector2d(0.5, 0.5);
  const std::vector<double> h{0.0, 1.0};
  EXPECT_TRUE(is_divergent(asymptotic_variance_exact(c, h)));
}

TEST(Comparison, PeskunOnSuite) {
  for (const auto& pair : fixtures::suite()) {
    const auto r = peskun_compare(pair.mh, pair.ex);
    EXPECT_TRUE(r.holds) << pair.name << " " << r.off_diagonal_margin;
    EXPECT_GE(r.diagonal_margin, -1e-12) << pair.name;
  }
}

TEST(Comparison, PeskunDetectsViolation) {
  const auto tp = fixtures::two_point();
  EXPECT_FALSE(peskun_compare(tp.ex, tp.mh).holds);
}

TEST(Comparison, SupremumOfSpectrumOrdered) {
  for (const auto& pair : fixtures::suite()) {
    EXPECT_GE(spectrum(pair.ex).M, spectrum(pair.mh).M - 1e-10) << pair.name;
  }
}

TEST(Comparison, SandwichOnSuite) {
  for (const auto& pair : fixtures::suite()) {
    const double mid = 0.5 * (pair.mh.grid.front() + pair.mh.grid.back());
    for (auto fn : std::vector<std::function<double(double)>>{
             [](double t) { return t; }, [](double t) { return t * t; },
             [mid](double t) { return t > mid ? 1.0 : 0.0; }}) {
      const auto h = evaluate_on_grid(pair.mh, fn);
      const auto r = variance_sandwich_check(pair.mh, pair.ex, h);
      EXPECT_TRUE(r.holds) << pair.name;
      EXPECT_EQ(r.degenerate, pair.name == "two-point") << pair.name;
    }
  }
}

TEST(Comparison, LazySpectralMap) {
  const auto bb = fixtures::beta_binomial(21);
  const auto base = spectrum(bb.ex);
  for (double lambda : {0.25, 0.5, 0.75}) {
    const auto lazy = lazy_matrix(bb.ex, lambda);
    const auto s = spectrum(lazy);
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
      EXPECT_NEAR(s.eigenvalues[i], lambda * base.eigenvalues[i] + 1 - lambda, 1e-10);
    }
    EXPECT_GE(s.m, 1 - 2 * lambda - 1e-12);
    const auto pos = positivity_check(lazy, PositivityCondition::min_diagonal);
    EXPECT_TRUE(pos.holds);
  }
  EXPECT_THROW(lazy_matrix(bb.ex, 1.0), std::invalid_argument);
  EXPECT_THROW(lazy_matrix(bb.ex, 0.0), std::invalid_argument);
}

TEST(Comparison, IndependenceProposalSpectraNonnegative) {
  const auto bb = fixtures::beta_binomial();
  EXPECT_TRUE(positivity_check(bb.mh, PositivityCondition::independence_proposal).holds);
  EXPECT_TRUE(positivity_check(bb.ex, PositivityCondition::independence_proposal).holds);
  const auto tp = fixtures::two_point();
  EXPECT_FALSE(positivity_check(tp.mh, PositivityCondition::independence_proposal).holds);
}
