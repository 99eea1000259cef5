#include "exmc/bound_check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "report_json.hpp"

namespace exmc {

BoundCheckResult make_bound_check(std::string claim_id,
                                  std::vector<std::vector<double>> points,
                                  std::vector<double> lhs, std::vector<double> rhs,
                                  double tolerance, std::string note) {
  if (lhs.size() != rhs.size() || lhs.size() != points.size()) {
    throw std::invalid_argument("bound check needs one lhs and rhs per evaluation point");
  }
  BoundCheckResult r;
  r.claim_id = std::move(claim_id);
  r.tolerance = tolerance;
  r.note = std::move(note);
  double worst = std::numeric_limits<double>::infinity();
  bool nan = false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const double margin = rhs[i] - lhs[i];
    nan = nan || std::isnan(margin);
    worst = std::min(worst, margin);
  }
  r.worst_margin = lhs.empty() ? 0.0 : worst;
  r.satisfied = !nan && -r.worst_margin <= tolerance;
  r.evaluation_points = std::move(points);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

std::string to_json(const BoundCheckResult& result) { return bound_check_json(result).dump(2); }

}  // namespace exmc
