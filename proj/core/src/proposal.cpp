#include "exmc/proposal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace exmc {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

std::string to_string(ProposalFamily family) {
  switch (family) {
    case ProposalFamily::random_walk_gaussian: return "random-walk-gaussian";
    case ProposalFamily::random_walk_uniform: return "random-walk-uniform";
    case ProposalFamily::random_walk_cauchy: return "random-walk-cauchy";
    case ProposalFamily::independence: return "independence";
    case ProposalFamily::discrete_uniform: return "discrete-uniform";
    case ProposalFamily::discrete_matrix: return "discrete-matrix";
  }
  return "unknown";
}

Proposal Proposal::random_walk_gaussian(double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("gaussian random walk needs scale > 0");
  Proposal p;
  p.family_ = ProposalFamily::random_walk_gaussian;
  p.scale_ = scale;
  p.label_ = to_string(p.family_);
  return p;
}

Proposal Proposal::random_walk_uniform(double half_width) {
  if (!(half_width > 0.0)) throw std::invalid_argument("uniform random walk needs half-width > 0");
  Proposal p;
  p.family_ = ProposalFamily::random_walk_uniform;
  p.scale_ = half_width;
  p.label_ = to_string(p.family_);
  return p;
}

Proposal Proposal::random_walk_cauchy(double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("cauchy random walk needs scale > 0");
  Proposal p;
  p.family_ = ProposalFamily::random_walk_cauchy;
  p.scale_ = scale;
  p.label_ = to_string(p.family_);
  return p;
}

Proposal Proposal::independence(std::function<double(double)> log_density,
                                std::function<double(RngStream&)> sampler, std::string label) {
  if (!log_density || !sampler) throw std::invalid_argument("independence proposal needs density and sampler");
  Proposal p;
  p.family_ = ProposalFamily::independence;
  p.symmetric_ = false;
  p.label_ = std::move(label);
  p.independence_log_density_ = std::move(log_density);
  p.independence_sampler_ = std::move(sampler);
  return p;
}

Proposal Proposal::independence_uniform(double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("uniform independence proposal needs lo < hi");
  const double log_density = -std::log(hi - lo);
  return independence(
      [=](double t) { return (t >= lo && t <= hi) ? log_density : kNegInf; },
      [=](RngStream& rng) { return lo + (hi - lo) * rng.uniform(); }, "independence-uniform");
}

Proposal Proposal::independence_gamma(double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) throw std::invalid_argument("gamma proposal needs shape, rate > 0");
  const double log_norm = shape * std::log(rate) - std::lgamma(shape);
  return independence(
      [=](double t) {
        return t > 0.0 ? log_norm + (shape - 1.0) * std::log(t) - rate * t : kNegInf;
      },
      [=](RngStream& rng) { return rng.gamma(shape, rate); }, "independence-gamma");
}

Proposal Proposal::discrete_uniform(std::vector<double> points) {
  if (points.size() < 2) throw std::invalid_argument("discrete uniform proposal needs two points");
  const std::size_t k = points.size();
  std::vector<std::vector<double>> q(k, std::vector<double>(k, 1.0 / static_cast<double>(k - 1)));
  for (std::size_t i = 0; i < k; ++i) q[i][i] = 0.0;
  auto p = discrete_matrix(std::move(points), std::move(q));
  p.family_ = ProposalFamily::discrete_uniform;
  p.label_ = to_string(p.family_);
  return p;
}

Proposal Proposal::discrete_matrix(std::vector<double> points,
                                   std::vector<std::vector<double>> matrix) {
  const std::size_t k = points.size();
  if (k == 0 || matrix.size() != k) throw std::invalid_argument("discrete proposal matrix must be K x K");
  if (!std::is_sorted(points.begin(), points.end()) ||
      std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::invalid_argument("discrete proposal points must be sorted and distinct");
  }
  auto d = std::make_shared<Discrete>();
  d->cumulative.resize(k);
  bool symmetric = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (matrix[i].size() != k) throw std::invalid_argument("discrete proposal matrix must be K x K");
    double sum = 0.0;
    for (double v : matrix[i]) {
      if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("proposal probabilities must be finite and >= 0");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("proposal matrix row " + std::to_string(i) + " sums to " +
                                  std::to_string(sum));
    }
    auto& cum = d->cumulative[i];
    cum.resize(k);
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t j = 0; j < k; ++j) {
      acc += matrix[i][j];
      cum[j] = acc;
      if (matrix[i][j] > 0.0) last_positive = j;
      if (j < i && std::abs(matrix[i][j] - matrix[j][i]) > 1e-15) symmetric = false;
    }
    for (std::size_t j = last_positive; j < k; ++j) cum[j] = 1.0;
  }
  d->points = std::move(points);
  d->matrix = std::move(matrix);
  Proposal p;
  p.family_ = ProposalFamily::discrete_matrix;
  p.symmetric_ = symmetric;
  p.label_ = to_string(p.family_);
  p.discrete_ = std::move(d);
  return p;
}

bool Proposal::is_random_walk() const noexcept {
  return family_ == ProposalFamily::random_walk_gaussian ||
         family_ == ProposalFamily::random_walk_uniform ||
         family_ == ProposalFamily::random_walk_cauchy;
}

bool Proposal::is_discrete() const noexcept { return static_cast<bool>(discrete_); }

const std::vector<double>& Proposal::points() const {
  if (!discrete_) throw std::logic_error("proposal " + label_ + " has no grid points");
  return discrete_->points;
}

double Proposal::probability(std::size_t from_index, std::size_t to_index) const {
  if (!discrete_) throw std::logic_error("proposal " + label_ + " is not discrete");
  return discrete_->matrix.at(from_index).at(to_index);
}

std::size_t Proposal::index_of(double theta) const {
  const auto& pts = points();
  const auto it = std::lower_bound(pts.begin(), pts.end(), theta);
  if (it == pts.end() || *it != theta) {
    throw std::domain_error("state " + std::to_string(theta) + " is not a proposal grid point");
  }
  return static_cast<std::size_t>(it - pts.begin());
}

double Proposal::log_q(double from, double to) const {
  const double d = to - from;
  switch (family_) {
    case ProposalFamily::random_walk_gaussian: {
      const double z = d / scale_;
      return -0.5 * z * z - std::log(scale_ * std::sqrt(2.0 * std::numbers::pi));
    }
    case ProposalFamily::random_walk_uniform:
      return std::abs(d) <= scale_ ? -std::log(2.0 * scale_) : kNegInf;
    case ProposalFamily::random_walk_cauchy: {
      const double z = d / scale_;
      return -std::log(std::numbers::pi * scale_) - std::log1p(z * z);
    }
    case ProposalFamily::independence:
      return independence_log_density_(to);
    case ProposalFamily::discrete_uniform:
    case ProposalFamily::discrete_matrix:
      return std::log(discrete_->matrix[index_of(from)][index_of(to)]);
  }
  return kNegInf;
}

double Proposal::sample(double from, RngStream& rng) const {
  switch (family_) {
    case ProposalFamily::random_walk_gaussian:
      return from + scale_ * rng.normal();
    case ProposalFamily::random_walk_uniform:
      return from + scale_ * (2.0 * rng.uniform() - 1.0);
    case ProposalFamily::random_walk_cauchy:
      return from + rng.cauchy(scale_);
    case ProposalFamily::independence:
      return independence_sampler_(rng);
    case ProposalFamily::discrete_uniform:
    case ProposalFamily::discrete_matrix: {
      const auto& cum = discrete_->cumulative[index_of(from)];
      const double u = rng.uniform();
      const auto it = std::lower_bound(cum.begin(), cum.end(), u);
      return discrete_->points[static_cast<std::size_t>(it - cum.begin())];
    }
  }
  return from;
}

}  // namespace exmc
