#include "exmc/space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace exmc {

ParamSpace ParamSpace::interval(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) {
    throw std::invalid_argument("parameter interval needs lo < hi");
  }
  ParamSpace s;
  s.kind_ = Kind::interval;
  s.lo_ = lo;
  s.hi_ = hi;
  return s;
}

ParamSpace ParamSpace::finite(std::vector<double> points) {
  if (points.empty()) throw std::invalid_argument("finite parameter space is empty");
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::invalid_argument("finite parameter space has repeated points");
  }
  for (double p : points) {
    if (!std::isfinite(p)) throw std::invalid_argument("finite parameter space point is not finite");
  }
  ParamSpace s;
  s.kind_ = Kind::finite;
  s.lo_ = points.front();
  s.hi_ = points.back();
  s.points_ = std::move(points);
  return s;
}

bool ParamSpace::contains(double theta) const {
  if (kind_ == Kind::finite) {
    return std::binary_search(points_.begin(), points_.end(), theta);
  }
  return theta >= lo_ && theta <= hi_;
}

bool ParamSpace::includes(const ParamSpace& other) const {
  if (other.is_finite()) {
    return std::all_of(other.points().begin(), other.points().end(),
                       [this](double p) { return contains(p); });
  }
  if (is_finite()) return false;
  return other.lo() >= lo_ && other.hi() <= hi_;
}

std::string ParamSpace::describe() const {
  std::ostringstream out;
  if (kind_ == Kind::finite) {
    out << "{";
    for (std::size_t i = 0; i < points_.size(); ++i) out << (i ? ", " : "") << points_[i];
    out << "}";
  } else {
    out << "[" << lo_ << ", " << hi_ << "]";
  }
  return out.str();
}

}  // namespace exmc
