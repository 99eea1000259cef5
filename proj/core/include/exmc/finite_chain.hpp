#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace exmc {

/// Transition matrix on a finite parameter grid with its stationary
/// vector. `weights` are the trapezoid weights when the grid discretizes
/// a continuum (empty for natively discrete parameter spaces).
struct FiniteChain {
  std::vector<double> grid;
  Eigen::MatrixXd P;
  Eigen::VectorXd pi;
  std::vector<double> weights;
  std::string label;

  std::size_t size() const noexcept { return grid.size(); }
  bool discretized() const noexcept { return !weights.empty(); }
};

struct ChainResiduals {
  double row_sum = 0.0;        // max_i |sum_j P_ij - 1|
  double stationarity = 0.0;   // max_j |(pi P)_j - pi_j|
  double reversibility = 0.0;  // max_ij |pi_i P_ij - pi_j P_ji|
};

ChainResiduals residuals(const FiniteChain& chain);

/// h(theta_i) for every grid point.
std::vector<double> evaluate_on_grid(const FiniteChain& chain,
                                     const std::function<double(double)>& h);

/// lambda P + (1 - lambda) I with the same stationary vector; lambda in (0, 1).
FiniteChain lazy_matrix(const FiniteChain& chain, double lambda);

/// Header row of grid values, then one row of P per grid point.
void write_matrix_csv(const FiniteChain& chain, std::ostream& out);

}  // namespace exmc
