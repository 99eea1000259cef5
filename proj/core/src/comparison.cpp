#include "exmc/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "exmc/errors.hpp"
#include "exmc/spectrum.hpp"

namespace exmc {

namespace {

void require_same_grid(const FiniteChain& a, const FiniteChain& b) {
  if (a.grid != b.grid) throw GridMismatchError("chains live on different grids");
  if ((a.pi - b.pi).cwiseAbs().maxCoeff() > 1e-10) {
    throw GridMismatchError("chains have different stationary vectors");
  }
}

}  // namespace

PeskunReport peskun_compare(const FiniteChain& mh, const FiniteChain& ex, double tolerance) {
  require_same_grid(mh, ex);
  PeskunReport r;
  r.tolerance = tolerance;
  r.off_diagonal_margin = std::numeric_limits<double>::infinity();
  r.diagonal_margin = std::numeric_limits<double>::infinity();
  const auto k = mh.P.rows();
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      if (i == j) {
        r.diagonal_margin = std::min(r.diagonal_margin, ex.P(i, i) - mh.P(i, i));
      } else {
        r.off_diagonal_margin = std::min(r.off_diagonal_margin, mh.P(i, j) - ex.P(i, j));
      }
    }
  }
  if (k < 2) r.off_diagonal_margin = 0.0;
  r.holds = r.off_diagonal_margin >= -tolerance && r.diagonal_margin >= -tolerance;
  return r;
}

SandwichReport variance_sandwich_check(const FiniteChain& mh, const FiniteChain& ex,
                                       std::span<const double> h, double tolerance) {
  require_same_grid(mh, ex);
  SandwichReport r;
  r.tolerance = tolerance;
  r.sigma2_mh = asymptotic_variance_exact(mh, h);
  r.sigma2_ex = asymptotic_variance_exact(ex, h);
  const auto smh = spectrum(mh);
  const auto sex = spectrum(ex);
  r.m_mh = smh.m;
  r.M_ex = sex.M;
  if (is_divergent(r.sigma2_mh) || is_divergent(r.sigma2_ex)) {
    r.divergent = true;
    r.left_holds = !is_divergent(r.sigma2_mh) || is_divergent(r.sigma2_ex);
    return r;
  }
  const double scale = std::max({std::abs(r.sigma2_mh), std::abs(r.sigma2_ex), 1e-300});
  r.left_holds = r.sigma2_mh <= r.sigma2_ex + tolerance * scale;
  const double var = stationary_variance(mh, h);
  r.degenerate = r.sigma2_mh <= 1e-12 * std::max(var, 1e-300) || r.m_mh <= -1.0 + 1e-12;
  if (r.degenerate) {
    r.upper = std::numeric_limits<double>::infinity();
    r.right_holds = true;
  } else {
    r.upper = (1.0 - r.m_mh) / (1.0 + r.m_mh) * 2.0 / (1.0 - r.M_ex) * r.sigma2_mh;
    r.right_holds = r.sigma2_ex <= r.upper * (1.0 + tolerance);
  }
  r.holds = r.left_holds && r.right_holds;
  return r;
}

std::string to_string(PositivityCondition condition) {
  return condition == PositivityCondition::min_diagonal ? "min-diagonal"
                                                        : "independence-proposal";
}

PositivityReport positivity_check(const FiniteChain& chain, PositivityCondition condition) {
  PositivityReport r;
  r.condition = condition;
  r.min_diagonal = chain.P.diagonal().minCoeff();
  const auto s = spectrum(chain);
  r.m = chain.size() < 2 ? 1.0 : s.m;
  r.bound = condition == PositivityCondition::min_diagonal ? 2.0 * r.min_diagonal - 1.0 : -1e-10;
  const double slack = condition == PositivityCondition::min_diagonal ? 1e-10 : 0.0;
  r.holds = r.m >= r.bound - slack;
  return r;
}

}  // namespace exmc
