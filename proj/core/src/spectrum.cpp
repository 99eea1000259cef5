#include "exmc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "exmc/errors.hpp"

namespace exmc {

namespace {

constexpr double kUnitTolerance = 1e-12;

// Symmetrized operator restricted to the orthogonal complement of sqrt(pi).
struct MeanZeroDecomposition {
  Eigen::MatrixXd basis;  // K x (K-1), orthonormal, orthogonal to sqrt(pi)
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // in basis coordinates
  Eigen::VectorXd sqrt_pi;
};

Eigen::MatrixXd symmetrized(const FiniteChain& chain, Eigen::VectorXd& sqrt_pi) {
  const auto k = static_cast<Eigen::Index>(chain.size());
  if (chain.P.rows() != k || chain.P.cols() != k || chain.pi.size() != k) {
    throw std::invalid_argument("chain matrix, grid and stationary vector sizes differ");
  }
  if (chain.pi.minCoeff() <= 0.0) {
    throw NonReversibleError("stationary vector has a non-positive entry");
  }
  const double rev = residuals(chain).reversibility;
  if (rev > kReversibilityTolerance) {
    throw NonReversibleError("detailed balance residual " + std::to_string(rev) +
                             " exceeds tolerance");
  }
  sqrt_pi = chain.pi.cwiseSqrt();
  Eigen::MatrixXd S = sqrt_pi.asDiagonal() * chain.P * sqrt_pi.cwiseInverse().asDiagonal();
  return 0.5 * (S + S.transpose());
}

// Orthonormal basis of the complement of unit vector u via a Householder
// reflection mapping e_0 to u.
Eigen::MatrixXd complement_basis(const Eigen::VectorXd& u) {
  const auto k = u.size();
  Eigen::VectorXd v = u;
  const double sign = u(0) >= 0.0 ? 1.0 : -1.0;
  v(0) += sign;
  const double norm2 = v.squaredNorm();
  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(k, k) - (2.0 / norm2) * v * v.transpose();
  return H.rightCols(k - 1);
}

MeanZeroDecomposition decompose(const FiniteChain& chain) {
  MeanZeroDecomposition d;
  const Eigen::MatrixXd S = symmetrized(chain, d.sqrt_pi);
  const Eigen::VectorXd u = d.sqrt_pi / d.sqrt_pi.norm();
  d.basis = complement_basis(u);
  const Eigen::MatrixXd S0 = d.basis.transpose() * S * d.basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (S0 + S0.transpose()));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  d.values = solver.eigenvalues();
  d.vectors = solver.eigenvectors();
  return d;
}

Eigen::VectorXd centered(const FiniteChain& chain, std::span<const double> h) {
  if (h.size() != chain.size()) throw std::invalid_argument("h must have one value per grid point");
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(h.data(), static_cast<Eigen::Index>(h.size()));
  v.array() -= chain.pi.dot(v);
  return v;
}

}  // namespace

SpectrumReport spectrum(const FiniteChain& chain) {
  SpectrumReport r;
  Eigen::VectorXd sqrt_pi;
  const Eigen::MatrixXd S = symmetrized(chain, sqrt_pi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(S, Eigen::EigenvaluesOnly);
  if (full.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  r.eigenvalues.assign(full.eigenvalues().data(), full.eigenvalues().data() + S.rows());
  if (chain.size() < 2) {
    r.m = r.M = 0.0;
    r.gap = 1.0;
    return r;
  }
  const auto d = decompose(chain);
  r.mean_zero_eigenvalues.assign(d.values.data(), d.values.data() + d.values.size());
  r.m = r.mean_zero_eigenvalues.front();
  r.M = r.mean_zero_eigenvalues.back();
  r.gap = 1.0 - std::max(std::abs(r.m), std::abs(r.M));
  return r;
}

double stationary_variance(const FiniteChain& chain, std::span<const double> h) {
  const Eigen::VectorXd c = centered(chain, h);
  return chain.pi.dot(c.cwiseProduct(c));
}

double asymptotic_variance_exact(const FiniteChain& chain, std::span<const double> h) {
  const Eigen::VectorXd c = centered(chain, h);
  const double scale = std::max(1.0, Eigen::Map<const Eigen::VectorXd>(
                                         h.data(), static_cast<Eigen::Index>(h.size()))
                                         .cwiseAbs()
                                         .maxCoeff());
  if (chain.size() < 2 || c.cwiseAbs().maxCoeff() <= 1e-14 * scale) return 0.0;
  const auto d = decompose(chain);
  const Eigen::VectorXd g = d.sqrt_pi.cwiseProduct(c);
  const Eigen::VectorXd coeff = d.vectors.transpose() * (d.basis.transpose() * g);
  double sigma2 = 0.0;
  for (Eigen::Index i = 0; i < d.values.size(); ++i) {
    const double l = std::clamp(d.values(i), -1.0, 1.0);
    if (l >= 1.0 - kUnitTolerance) return kDivergentVariance;
    sigma2 += (1.0 + l) / (1.0 - l) * coeff(i) * coeff(i);
  }
  return sigma2;
}

}  // namespace exmc
