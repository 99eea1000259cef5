#pragma once

#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "exmc/finite_chain.hpp"

namespace exmc {

/// Spectrum of a reversible chain, split into the stationary direction and
/// the mean-zero subspace L^2_0(pi).
struct SpectrumReport {
  std::vector<double> eigenvalues;            // all K, ascending
  std::vector<double> mean_zero_eigenvalues;  // K - 1, ascending
  double m = 0.0;    // inf of the mean-zero spectrum
  double M = 0.0;    // sup of the mean-zero spectrum
  double gap = 0.0;  // 1 - max |lambda| on the mean-zero subspace
};

/// Maximum |pi_i P_ij - pi_j P_ji| tolerated before a chain counts as
/// non-reversible.
inline constexpr double kReversibilityTolerance = 1e-10;

/// Eigensolve of D^{1/2} P D^{-1/2}, D = diag(pi). Throws NonReversibleError.
SpectrumReport spectrum(const FiniteChain& chain);

inline constexpr double kDivergentVariance = std::numeric_limits<double>::infinity();

inline bool is_divergent(double variance) noexcept { return variance == kDivergentVariance; }

/// sigma^2(P, h) = sum over mean-zero eigenpairs of (1 + l) / (1 - l) <h, v>_pi^2.
/// h is centered under pi first. Returns kDivergentVariance when a
/// mean-zero eigenvalue reaches 1 - 1e-12 and the centered h is nonzero.
double asymptotic_variance_exact(const FiniteChain& chain, std::span<const double> h);

/// Var_pi(h).
double stationary_variance(const FiniteChain& chain, std::span<const double> h);

}  // namespace exmc
