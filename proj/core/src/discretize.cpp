#include "exmc/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "exmc/errors.hpp"
#include "exmc/quadrature.hpp"
#include "exmc/stats.hpp"

namespace exmc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

const QuadratureRule kPosteriorRule{1e-12, 1e-10, 24};

// Unnormalized posterior density rescaled so its largest value on a probe
// scan is 1, together with the location of that maximum.
struct ScaledDensity {
  const PosteriorSpec* posterior;
  double log_ref = 0.0;
  double mode = 0.0;

  double operator()(double t) const {
    const double v = posterior->log_unnormalized(t);
    return v == kNegInf ? 0.0 : std::exp(v - log_ref);
  }
};

std::vector<double> probe_points(double lo, double hi) {
  std::vector<double> pts;
  if (std::isfinite(lo) && std::isfinite(hi)) {
    for (int i = 0; i <= 4000; ++i) pts.push_back(lo + (hi - lo) * i / 4000.0);
    return pts;
  }
  for (int k = -600; k <= 600; ++k) {
    const double r = std::pow(10.0, k / 100.0);
    if (std::isfinite(lo)) {
      pts.push_back(lo + r);
    } else if (std::isfinite(hi)) {
      pts.push_back(hi - r);
    } else {
      pts.push_back(r);
      pts.push_back(-r);
    }
  }
  if (!std::isfinite(lo) && !std::isfinite(hi)) pts.push_back(0.0);
  return pts;
}

ScaledDensity scaled_density(const PosteriorSpec& posterior) {
  const auto& s = posterior.prior().support();
  if (s.is_finite()) throw std::logic_error("posterior has a discrete parameter space");
  ScaledDensity d{&posterior, kNegInf, 0.0};
  for (double t : probe_points(s.lo(), s.hi())) {
    const double v = posterior.log_unnormalized(t);
    if (v > d.log_ref) {
      d.log_ref = v;
      d.mode = t;
    }
  }
  if (d.log_ref == kNegInf) throw UndefinedDensityError("posterior vanishes on the probe scan");
  return d;
}

double mass_between(const ScaledDensity& f, double a, double b) {
  if (!(a < b)) return 0.0;
  const double cut[] = {f.mode};
  return integrate(f, a, b, kPosteriorRule, cut);
}

double quantile(const ScaledDensity& f, double lo, double hi, double total, double q) {
  auto cdf = [&](double t) { return mass_between(f, lo, t) / total; };
  double a = f.mode;
  double b = f.mode;
  double step = std::max(1.0, std::abs(f.mode)) * 1e-2;
  // Bracket: cdf(a) <= q <= cdf(b).
  while (cdf(a) > q) {
    if (std::isfinite(lo) && a - step <= lo) {
      a = lo;
      break;
    }
    a -= step;
    step *= 2.0;
  }
  step = std::max(1.0, std::abs(f.mode)) * 1e-2;
  while (cdf(b) < q) {
    if (std::isfinite(hi) && b + step >= hi) {
      b = hi;
      break;
    }
    b += step;
    step *= 2.0;
  }
  for (int i = 0; i < 200 && b - a > 1e-13 * std::max(1.0, std::abs(a)); ++i) {
    const double m = 0.5 * (a + b);
    (cdf(m) < q ? a : b) = m;
  }
  return 0.5 * (a + b);
}

}  // namespace

std::pair<double, double> posterior_mass_interval(const PosteriorSpec& posterior, double mass) {
  if (!(mass > 0.0 && mass < 1.0)) throw std::invalid_argument("mass must lie in (0, 1)");
  const auto f = scaled_density(posterior);
  const auto& s = posterior.prior().support();
  const double total = mass_between(f, s.lo(), s.hi());
  const double tail = 0.5 * (1.0 - mass);
  return {quantile(f, s.lo(), s.hi(), total, tail),
          quantile(f, s.lo(), s.hi(), total, 1.0 - tail)};
}

double posterior_expectation(const PosteriorSpec& posterior,
                             const std::function<double(double)>& h) {
  const auto f = scaled_density(posterior);
  const auto& s = posterior.prior().support();
  const double cut[] = {f.mode};
  const double total = integrate(f, s.lo(), s.hi(), kPosteriorRule, cut);
  const double num = integrate(
      [&](double t) {
        const double w = f(t);
        return w == 0.0 ? 0.0 : w * h(t);
      },
      s.lo(), s.hi(), kPosteriorRule, cut);
  return num / total;
}

DiscretizedProblem discretize(const PosteriorSpec& posterior, const Proposal& proposal,
                              const GridSpec& spec) {
  const auto& support = posterior.prior().support();
  if (support.is_finite()) {
    if (!proposal.is_discrete() || proposal.points() != support.points()) {
      throw GridMismatchError("proposal points do not match the discrete parameter space");
    }
    return {posterior, proposal, support.points(), {}};
  }
  if (spec.size < 2) throw std::invalid_argument("grid needs at least two points");
  if (spec.size > GridSpec::kMaxSize) {
    throw BudgetError("grid size " + std::to_string(spec.size) + " exceeds the cap of " +
                      std::to_string(GridSpec::kMaxSize));
  }
  double lo = 0.0;
  double hi = 0.0;
  if (spec.lo && spec.hi) {
    lo = *spec.lo;
    hi = *spec.hi;
  } else {
    const auto [a, b] = posterior_mass_interval(posterior);
    lo = spec.lo.value_or(a);
    hi = spec.hi.value_or(b);
  }
  if (!(lo < hi)) throw std::invalid_argument("grid needs lo < hi");
  if (!support.contains(lo) || !support.contains(hi)) {
    throw std::invalid_argument("grid interval leaves the prior support " + support.describe());
  }

  const std::size_t k = spec.size;
  const double h = (hi - lo) / static_cast<double>(k - 1);
  std::vector<double> grid(k);
  std::vector<double> weights(k, h);
  for (std::size_t j = 0; j < k; ++j) grid[j] = lo + h * static_cast<double>(j);
  grid.back() = hi;
  weights.front() = weights.back() = 0.5 * h;

  std::vector<double> masses(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (posterior.log_unnormalized(grid[j]) == kNegInf) {
      throw UndefinedDensityError("grid point " + std::to_string(grid[j]) +
                                  " has zero posterior density");
    }
    masses[j] = std::exp(posterior.prior().log_density(grid[j])) * weights[j];
  }

  std::vector<std::vector<double>> q(k, std::vector<double>(k, 0.0));
  std::vector<double> logs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      logs[j] = proposal.log_q(grid[i], grid[j]) + std::log(weights[j]);
    }
    const double norm = log_sum_exp(logs);
    if (norm == kNegInf) throw std::invalid_argument("proposal puts no mass on the grid");
    for (std::size_t j = 0; j < k; ++j) q[i][j] = std::exp(logs[j] - norm);
  }

  Prior prior = Prior::discrete(grid, masses);
  PosteriorSpec grid_posterior(posterior.model_ptr(), prior, posterior.data());
  return {std::move(grid_posterior), Proposal::discrete_matrix(grid, std::move(q)), grid,
          std::move(weights)};
}

}  // namespace exmc
