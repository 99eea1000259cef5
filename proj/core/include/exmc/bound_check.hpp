#pragma once

#include <string>
#include <vector>

namespace exmc {

/// Outcome of checking lhs <= rhs at a list of evaluation points.
/// satisfied holds exactly when max(lhs - rhs) <= tolerance.
struct BoundCheckResult {
  std::string claim_id;
  std::vector<std::vector<double>> evaluation_points;
  std::vector<double> lhs;
  std::vector<double> rhs;
  bool satisfied = false;
  double worst_margin = 0.0;  // min(rhs - lhs)
  double tolerance = 0.0;
  std::string note;
};

/// Fills satisfied and worst_margin from lhs, rhs and tolerance.
BoundCheckResult make_bound_check(std::string claim_id,
                                  std::vector<std::vector<double>> points,
                                  std::vector<double> lhs, std::vector<double> rhs,
                                  double tolerance, std::string note = {});

std::string to_json(const BoundCheckResult& result);

}  // namespace exmc
