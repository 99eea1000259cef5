#include "exmc/output_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exmc/errors.hpp"
#include "exmc/matrices.hpp"
#include "exmc/parallel.hpp"
#include "exmc/spectrum.hpp"

namespace exmc {

double batch_means_variance(std::span<const double> values, std::size_t batch_count) {
  if (batch_count < 2) throw std::invalid_argument("batch means needs at least two batches");
  const std::size_t n = values.size();
  if (n < batch_count * batch_count) {
    throw TooShortTraceError("trace of length " + std::to_string(n) + " is shorter than " +
                             std::to_string(batch_count) + "^2");
  }
  const std::size_t b = n / batch_count;
  std::vector<double> means(batch_count);
  for (std::size_t k = 0; k < batch_count; ++k) {
    double s = 0.0;
    for (std::size_t i = k * b; i < (k + 1) * b; ++i) s += values[i];
    means[k] = s / static_cast<double>(b);
  }
  return static_cast<double>(b) * sample_variance(means);
}

double batch_means_variance(const Trace& trace, const std::function<double(double)>& h,
                            std::size_t batch_count) {
  std::vector<double> v(trace.states.size());
  std::transform(trace.states.begin(), trace.states.end(), v.begin(), h);
  return batch_means_variance(v, batch_count);
}

std::string to_string(CltStatus status) {
  switch (status) {
    case CltStatus::passed: return "passed";
    case CltStatus::failed: return "failed";
    case CltStatus::degenerate: return "degenerate";
    case CltStatus::divergent: return "divergent";
  }
  return "unknown";
}

BoundCheckResult CltReport::to_bound_check() const {
  const double stat = status == CltStatus::degenerate ? 0.0 : ks.statistic;
  const double p = status == CltStatus::degenerate ? 1.0 : ks.p_value;
  return make_bound_check("clt", {{static_cast<double>(replications), static_cast<double>(steps)}},
                          {significance}, {passes() ? std::max(p, significance) : p}, 0.0,
                          "lhs is the KS significance, rhs the p-value; status " + to_string(status) +
                              ", KS statistic " + std::to_string(stat));
}

FiniteChain kernel_matrix(const KernelSpec& spec, unsigned threads) {
  auto chain = spec.algorithm() == Algorithm::mh
                   ? build_mh_matrix(spec.posterior(), spec.proposal())
                   : build_exchange_matrix(spec.posterior(), spec.proposal(), threads);
  if (spec.laziness() < 1.0) chain = lazy_matrix(chain, spec.laziness());
  return chain;
}

CltReport clt_check(const KernelSpec& spec, const std::function<double(double)>& h,
                    const CltOptions& options) {
  if (options.replications < 2 || options.steps < 1) {
    throw std::invalid_argument("CLT check needs at least two replications and one step");
  }
  const auto chain = kernel_matrix(spec, options.threads);
  const auto hv = evaluate_on_grid(chain, h);
  CltReport r;
  r.replications = options.replications;
  r.steps = options.steps;
  r.significance = options.significance;
  r.sigma2 = asymptotic_variance_exact(chain, hv);
  r.mean_h = chain.pi.dot(Eigen::Map<const Eigen::VectorXd>(hv.data(), static_cast<Eigen::Index>(hv.size())));
  if (is_divergent(r.sigma2)) {
    r.status = CltStatus::divergent;
    return r;
  }
  const double var = stationary_variance(chain, hv);
  const bool degenerate = r.sigma2 <= 1e-12 * std::max(var, 1e-300);

  std::vector<double> cumulative(chain.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    acc += chain.pi(static_cast<Eigen::Index>(i));
    cumulative[i] = acc;
  }
  const auto& grid = chain.grid;
  const double n = static_cast<double>(options.steps);
  std::vector<double> scaled(options.replications);
  parallel_for(options.replications, options.threads, [&](std::size_t rep) {
    const std::uint64_t seed = mix_seed(options.seed, rep);
    RngStream init(seed, 2);
    const double u = init.uniform() * acc;
    const auto idx = std::min<std::size_t>(
        static_cast<std::size_t>(std::lower_bound(cumulative.begin(), cumulative.end(), u) -
                                 cumulative.begin()),
        grid.size() - 1);
    // Sum over X_0 .. X_{n-1}.
    double sum = h(grid[idx]);
    double theta = grid[idx];
    ChainRng rng(seed);
    for (std::size_t i = 1; i < options.steps; ++i) {
      theta = step(spec, theta, rng).theta;
      sum += h(theta);
    }
    scaled[rep] = (sum - n * r.mean_h) / std::sqrt(n);
  });

  if (degenerate) {
    r.status = CltStatus::degenerate;
    for (double s : scaled) r.max_abs_scaled_sum = std::max(r.max_abs_scaled_sum, std::abs(s));
    return r;
  }
  std::vector<double> z(scaled.size());
  const double sd = std::sqrt(r.sigma2);
  std::transform(scaled.begin(), scaled.end(), z.begin(), [&](double s) { return s / sd; });
  r.ks = ks_test_standard_normal(std::move(z));
  r.status = r.ks.p_value >= options.significance ? CltStatus::passed : CltStatus::failed;
  return r;
}

FrequencyTestReport marginal_frequency_test(const Trace& trace, const FiniteChain& chain,
                                            double significance) {
  const auto s = spectrum(chain);
  const double rho = std::max(std::abs(s.m), std::abs(s.M));
  if (rho >= 1.0 - 1e-12) {
    throw std::invalid_argument("chain has no spectral gap; frequencies need not converge");
  }
  FrequencyTestReport r;
  r.significance = significance;
  r.thin = rho <= 1e-12 ? 1 : static_cast<std::size_t>(std::ceil(std::log(1e-3) / std::log(rho)));
  r.thin = std::max<std::size_t>(r.thin, 1);
  std::vector<double> counts(chain.size(), 0.0);
  for (std::size_t i = r.thin; i < trace.states.size(); i += r.thin) {
    const auto it = std::lower_bound(chain.grid.begin(), chain.grid.end(), trace.states[i]);
    if (it == chain.grid.end() || *it != trace.states[i]) {
      throw GridMismatchError("trace visits a state outside the chain grid");
    }
    counts[static_cast<std::size_t>(it - chain.grid.begin())] += 1.0;
    ++r.samples;
  }
  std::vector<double> probs(chain.pi.data(), chain.pi.data() + chain.pi.size());
  r.fit = chi_square_test(counts, probs);
  return r;
}

}  // namespace exmc
