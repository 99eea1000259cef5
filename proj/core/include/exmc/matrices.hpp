#pragma once

#include "exmc/discretize.hpp"
#include "exmc/finite_chain.hpp"
#include "exmc/posterior.hpp"
#include "exmc/proposal.hpp"

namespace exmc {

/// Upper bound on grid_size^2 * enumeration_size for exchange matrices.
inline constexpr double kExchangeBudget = 4e9;

/// MH matrix on the points of a discrete posterior. The proposal must be
/// discrete on the same points. Off-diagonal P_ij = q_ij min(1, pi_j q_ji /
/// (pi_i q_ij)); the diagonal takes the remainder.
FiniteChain build_mh_matrix(const PosteriorSpec& posterior, const Proposal& proposal);

/// Exchange matrix: P_ij = q_ij E_{w ~ p_j}[min(1, a(theta_i, theta_j, w))],
/// with the expectation taken exactly over the sample space. Rows are
/// computed on up to `threads` workers.
FiniteChain build_exchange_matrix(const PosteriorSpec& posterior, const Proposal& proposal,
                                  unsigned threads = 1);

/// Same, on a discretized problem; the chain keeps the trapezoid weights.
FiniteChain build_mh_matrix(const DiscretizedProblem& problem);
FiniteChain build_exchange_matrix(const DiscretizedProblem& problem, unsigned threads = 1);

}  // namespace exmc
