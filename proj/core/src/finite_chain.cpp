#include "exmc/finite_chain.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace exmc {

ChainResiduals residuals(const FiniteChain& chain) {
  const auto& P = chain.P;
  const auto& pi = chain.pi;
  ChainResiduals r;
  r.row_sum = (P.rowwise().sum().array() - 1.0).abs().maxCoeff();
  r.stationarity = ((pi.transpose() * P).transpose() - pi).cwiseAbs().maxCoeff();
  const Eigen::MatrixXd flow = pi.asDiagonal() * P;
  r.reversibility = (flow - flow.transpose()).cwiseAbs().maxCoeff();
  return r;
}

std::vector<double> evaluate_on_grid(const FiniteChain& chain,
                                     const std::function<double(double)>& h) {
  std::vector<double> out(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) out[i] = h(chain.grid[i]);
  return out;
}

FiniteChain lazy_matrix(const FiniteChain& chain, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("lazy_matrix needs lambda in (0, 1)");
  }
  FiniteChain out = chain;
  const auto k = static_cast<Eigen::Index>(chain.size());
  out.P = lambda * chain.P + (1.0 - lambda) * Eigen::MatrixXd::Identity(k, k);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", lambda);
  out.label = chain.label + " lazy(" + buf + ")";
  return out;
}

void write_matrix_csv(const FiniteChain& chain, std::ostream& out) {
  char buf[32];
  out << "theta";
  for (double t : chain.grid) {
    std::snprintf(buf, sizeof buf, "%.17g", t);
    out << ',' << buf;
  }
  out << '\n';
  for (Eigen::Index i = 0; i < chain.P.rows(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", chain.grid[static_cast<std::size_t>(i)]);
    out << buf;
    for (Eigen::Index j = 0; j < chain.P.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", chain.P(i, j));
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace exmc
