#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "exmc/bound_check.hpp"
#include "exmc/posterior.hpp"
#include "exmc/proposal.hpp"
#include "exmc/space.hpp"

namespace exmc {

struct TailSearch {
  /// Candidate decay rates alpha; default 1e-3 .. 1e2, log spaced.
  std::vector<double> alphas;
  /// Offsets d >= 0 giving x1 = center + d (right tail) or center - d (left).
  std::vector<double> x1_offsets;
  /// Where the tail scan stops, as an offset beyond x1.
  double reach = 1e6;

  static TailSearch defaults();
};

struct TailSideResult {
  bool passes = false;
  double best_alpha = 0.0;  // largest passing alpha
  double x1 = 0.0;          // smallest x1 at which best_alpha passes
  std::vector<double> passing_alphas;
};

struct TailReport {
  bool two_sided = false;
  double center = 0.0;
  TailSideResult right;
  TailSideResult left;  // unused unless two_sided

  bool passes() const noexcept { return right.passes && (!two_sided || left.passes); }
  /// Largest alpha passing on every checked side (0 when none).
  double best_alpha() const noexcept;
  BoundCheckResult to_bound_check() const;
};

/// Searches for (alpha, x1) with log pi(x) - log pi(y) >= alpha (y - x)
/// for all sampled y > x > x1, i.e. log pi(t) + alpha t nonincreasing on a
/// scan beyond x1; mirrored for the left tail of a two-sided support.
/// Sides bounded by the support pass trivially.
TailReport tail_condition_check(const std::function<double(double)>& log_density,
                                const ParamSpace& support, const TailSearch& search = TailSearch::defaults());

TailReport tail_condition_check(const PosteriorSpec& posterior,
                                const TailSearch& search = TailSearch::defaults());

struct ProposalTailReport {
  double alpha = 0.0;
  bool bounded = false;
  double b = 0.0;         // max_s q(s) exp(alpha s) when bounded
  double argmax = 0.0;
};

/// Looks for a finite b with q(s) <= b exp(-alpha s), s >= 0, by maximizing
/// q(s) exp(alpha s) over a radius grid out to 1e6. Random walks only.
ProposalTailReport proposal_tail_check(const Proposal& proposal, double alpha);

}  // namespace exmc
