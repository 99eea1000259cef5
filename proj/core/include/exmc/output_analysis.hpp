#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "exmc/bound_check.hpp"
#include "exmc/finite_chain.hpp"
#include "exmc/kernel.hpp"
#include "exmc/stats.hpp"
#include "exmc/trace.hpp"

namespace exmc {

/// Non-overlapping batch means: b * (sample variance of the batch means),
/// with b = floor(n / batch_count). Throws TooShortTraceError when
/// n < batch_count^2.
double batch_means_variance(std::span<const double> values, std::size_t batch_count);

/// Same, on h evaluated along every state of the trace.
double batch_means_variance(const Trace& trace, const std::function<double(double)>& h,
                            std::size_t batch_count);

struct CltOptions {
  std::size_t replications = 2000;
  std::size_t steps = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  double significance = 0.001;
};

enum class CltStatus { passed, failed, degenerate, divergent };

std::string to_string(CltStatus status);

struct CltReport {
  CltStatus status = CltStatus::failed;
  double sigma2 = 0.0;       // exact spectral asymptotic variance
  double mean_h = 0.0;       // E_pi[h] on the grid
  GoodnessOfFit ks;          // against N(0, 1)
  double max_abs_scaled_sum = 0.0;  // max |S_n - n E h| / sqrt(n), degenerate case
  std::size_t replications = 0;
  std::size_t steps = 0;
  double significance = 0.001;

  /// Passed, or degenerate (sigma^2 = 0 makes the limit a point mass).
  bool passes() const noexcept {
    return status == CltStatus::passed || status == CltStatus::degenerate;
  }
  BoundCheckResult to_bound_check() const;
};

/// Runs independent stationary-start chains of the kernel (which must live
/// on a discrete parameter grid), standardizes (sum h(X_i) - n E h) by
/// sqrt(n sigma^2) with the exact spectral sigma^2, and runs a KS test
/// against N(0, 1). Replication r uses seed mix_seed(seed, r).
CltReport clt_check(const KernelSpec& spec, const std::function<double(double)>& h,
                    const CltOptions& options = {});

/// The finite chain a grid kernel simulates (MH or exchange, with laziness).
FiniteChain kernel_matrix(const KernelSpec& spec, unsigned threads = 1);

struct FrequencyTestReport {
  GoodnessOfFit fit;
  std::size_t thin = 1;
  std::size_t samples = 0;
  double significance = 0.001;

  bool passes() const noexcept { return fit.p_value >= significance; }
};

/// Chi-square test of state frequencies along a grid trace against the
/// chain's stationary vector. States are thinned by the smallest k with
/// rho^k <= 1e-3 (rho the mean-zero spectral radius) so that the retained
/// draws are close to independent.
FrequencyTestReport marginal_frequency_test(const Trace& trace, const FiniteChain& chain,
                                            double significance = 0.001);

}  // namespace exmc
