#include "exmc/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/tools/minima.hpp>

namespace exmc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> scan_offsets(double reach) {
  std::vector<double> d;
  for (int i = 0; i <= 200; ++i) d.push_back(0.05 * i);
  for (double r = 10.0; r <= reach * (1.0 + 1e-12); r *= 1.02) d.push_back(r);
  return d;
}

// log pi(t) + alpha t nonincreasing along the samples of t = x1 + d
// (right tail) or t = x1 - d with the sign of alpha t flipped (left).
bool monotone_beyond(const std::vector<double>& values_at, double alpha,
                     const std::vector<double>& offsets) {
  double prev = kNegInf;
  bool first = true;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const double lp = values_at[i];
    const double g = lp == kNegInf ? kNegInf : lp + alpha * offsets[i];
    if (!first) {
      if (g != kNegInf && g > prev + 1e-12 * std::max(1.0, std::abs(prev))) return false;
    }
    prev = g;
    first = false;
  }
  return true;
}

TailSideResult check_side(const std::function<double(double)>& log_density, double center,
                          double sign, const TailSearch& search) {
  TailSideResult r;
  const auto offsets = scan_offsets(search.reach);
  std::vector<double> x1s = search.x1_offsets;
  std::sort(x1s.begin(), x1s.end());
  std::vector<double> alphas = search.alphas;
  std::sort(alphas.begin(), alphas.end());
  // Cache log pi along each scan.
  std::vector<std::vector<double>> values(x1s.size(), std::vector<double>(offsets.size()));
  for (std::size_t k = 0; k < x1s.size(); ++k) {
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      const double v = log_density(center + sign * (x1s[k] + offsets[i]));
      values[k][i] = std::isnan(v) ? kNegInf : v;
    }
  }
  for (double alpha : alphas) {
    for (std::size_t k = 0; k < x1s.size(); ++k) {
      if (monotone_beyond(values[k], alpha, offsets)) {
        r.passing_alphas.push_back(alpha);
        if (alpha >= r.best_alpha) {
          r.best_alpha = alpha;
          r.x1 = center + sign * x1s[k];
        }
        break;
      }
    }
  }
  r.passes = !r.passing_alphas.empty();
  return r;
}

}  // namespace

TailSearch TailSearch::defaults() {
  TailSearch s;
  for (int i = 0; i <= 50; ++i) s.alphas.push_back(std::pow(10.0, -3.0 + 0.1 * i));
  s.x1_offsets = {0, 1, 2, 5, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000, 10000};
  return s;
}

double TailReport::best_alpha() const noexcept {
  if (!passes()) return 0.0;
  return two_sided ? std::min(right.best_alpha, left.best_alpha) : right.best_alpha;
}

BoundCheckResult TailReport::to_bound_check() const {
  // The condition asks for some alpha, so each side contributes one row.
  std::vector<std::vector<double>> points{{1.0, right.best_alpha, right.x1}};
  std::vector<double> lhs{right.passes ? 0.0 : 1.0};
  if (two_sided) {
    points.push_back({-1.0, left.best_alpha, left.x1});
    lhs.push_back(left.passes ? 0.0 : 1.0);
  }
  std::vector<double> rhs(lhs.size(), 0.0);
  return make_bound_check("tail-condition", std::move(points), std::move(lhs), std::move(rhs), 0.0,
                          "points are (side, best alpha, x1); lhs 1 marks a side with no passing alpha");
}

TailReport tail_condition_check(const std::function<double(double)>& log_density,
                                const ParamSpace& support, const TailSearch& search) {
  if (support.is_finite()) throw std::invalid_argument("tail check needs a continuous parameter");
  if (search.alphas.empty() || search.x1_offsets.empty()) {
    throw std::invalid_argument("tail check needs nonempty alpha and x1 grids");
  }
  TailReport r;
  const double lo = support.lo();
  const double hi = support.hi();
  // Center: the best point of a coarse scan.
  double best = kNegInf;
  std::vector<double> probe;
  if (std::isfinite(lo) && std::isfinite(hi)) {
    for (int i = 0; i <= 1000; ++i) probe.push_back(lo + (hi - lo) * i / 1000.0);
  } else {
    for (int k = -300; k <= 300; ++k) {
      const double step = std::pow(10.0, k / 50.0);
      if (std::isfinite(lo)) probe.push_back(lo + step);
      else if (std::isfinite(hi)) probe.push_back(hi - step);
      else {
        probe.push_back(step);
        probe.push_back(-step);
      }
    }
  }
  for (double t : probe) {
    const double v = log_density(t);
    if (v > best) {
      best = v;
      r.center = t;
    }
  }
  auto bounded = [](double center) {
    TailSideResult s;
    s.passes = true;
    s.best_alpha = std::numeric_limits<double>::infinity();
    s.x1 = center;
    return s;
  };
  r.right = std::isfinite(hi) ? bounded(hi) : check_side(log_density, r.center, 1.0, search);
  r.two_sided = !std::isfinite(lo);
  if (r.two_sided) r.left = check_side(log_density, r.center, -1.0, search);
  return r;
}

TailReport tail_condition_check(const PosteriorSpec& posterior, const TailSearch& search) {
  return tail_condition_check([&](double t) { return posterior.log_unnormalized(t); },
                              posterior.prior().support(), search);
}

ProposalTailReport proposal_tail_check(const Proposal& proposal, double alpha) {
  if (!proposal.is_random_walk()) {
    throw std::invalid_argument("proposal tail check needs a random-walk proposal");
  }
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  ProposalTailReport r;
  r.alpha = alpha;
  auto g = [&](double s) { return proposal.log_q(0.0, s) + alpha * s; };
  std::vector<double> radii;
  for (int i = 0; i <= 2000; ++i) radii.push_back(0.01 * i);
  for (double s = 20.0; s <= 1e6; s *= 1.01) radii.push_back(s);
  radii.push_back(proposal.scale());
  std::sort(radii.begin(), radii.end());
  std::size_t arg = 0;
  double best = kNegInf;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double v = g(radii[i]);
    if (v >= best) {
      best = v;
      arg = i;
    }
  }
  // A maximum at the outer edge means q(s) e^{alpha s} is still growing.
  if (arg + 1 >= radii.size() || best == kNegInf) {
    r.bounded = false;
    r.argmax = radii[arg];
    r.b = std::numeric_limits<double>::infinity();
    return r;
  }
  const double a = arg > 0 ? radii[arg - 1] : radii[0];
  const double c = radii[arg + 1];
  double s_best = radii[arg];
  if (std::isfinite(g(a)) && std::isfinite(g(c))) {
    const auto m = boost::math::tools::brent_find_minima([&](double s) { return -g(s); }, a, c, 52);
    if (-m.second > best) {
      best = -m.second;
      s_best = m.first;
    }
  }
  r.bounded = true;
  r.argmax = s_best;
  r.b = std::exp(best);
  return r;
}

}  // namespace exmc
