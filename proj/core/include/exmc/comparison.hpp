#pragma once

#include <span>
#include <string>

#include "exmc/finite_chain.hpp"

namespace exmc {

struct PeskunReport {
  bool holds = false;
  double off_diagonal_margin = 0.0;  // min over i != j of P_mh(i,j) - P_ex(i,j)
  double diagonal_margin = 0.0;      // min over i of P_ex(i,i) - P_mh(i,i)
  double tolerance = 1e-12;
};

/// Checks P_ex(i,j) <= P_mh(i,j) off the diagonal and P_ex(i,i) >= P_mh(i,i).
/// Throws GridMismatchError unless both chains share grid and pi.
PeskunReport peskun_compare(const FiniteChain& mh, const FiniteChain& ex,
                            double tolerance = 1e-12);

struct SandwichReport {
  double sigma2_mh = 0.0;
  double sigma2_ex = 0.0;
  double m_mh = 0.0;        // inf of P_mh's mean-zero spectrum
  double M_ex = 0.0;        // sup of P_ex's mean-zero spectrum
  double upper = 0.0;       // (1 - m)/(1 + m) * 2/(1 - M) * sigma2_mh
  bool left_holds = false;
  bool right_holds = false;
  bool degenerate = false;  // sigma2_mh = 0: only the left inequality is asserted
  bool divergent = false;
  bool holds = false;
  double tolerance = 1e-10;
};

/// sigma2(MH, h) <= sigma2(EX, h) <= (1 - m_mh)/(1 + m_mh) * 2/(1 - M_ex) * sigma2(MH, h),
/// with relative tolerance `tolerance`.
SandwichReport variance_sandwich_check(const FiniteChain& mh, const FiniteChain& ex,
                                       std::span<const double> h, double tolerance = 1e-10);

enum class PositivityCondition { min_diagonal, independence_proposal };

std::string to_string(PositivityCondition condition);

struct PositivityReport {
  PositivityCondition condition = PositivityCondition::min_diagonal;
  double min_diagonal = 0.0;   // c = min_i P_ii
  double m = 0.0;              // inf of the mean-zero spectrum
  double bound = 0.0;          // 2c - 1, or -1e-10 for independence proposals
  bool holds = false;
};

/// min-diagonal: m >= 2c - 1. independence-proposal: m >= -1e-10.
PositivityReport positivity_check(const FiniteChain& chain, PositivityCondition condition);

}  // namespace exmc
