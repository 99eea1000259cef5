#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "exmc/quadrature.hpp"

namespace exmc {

/// A point of a model's sample space. Discrete spaces use the integers
/// 0, 1, 2, ... (a count, a spin-configuration index, an edge bitmask);
/// continuum spaces use the real value itself.
using SamplePoint = double;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Parameter space: a real interval (possibly unbounded) or a finite set.
class ParamSpace {
 public:
  enum class Kind { interval, finite };

  static ParamSpace interval(double lo, double hi);
  static ParamSpace real_line() { return interval(-kInf, kInf); }
  static ParamSpace positive_half_line() { return interval(0.0, kInf); }
  static ParamSpace finite(std::vector<double> points);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  /// Sorted, distinct points of a finite space.
  const std::vector<double>& points() const noexcept { return points_; }

  bool contains(double theta) const;
  /// True when every point of `other` lies in this space.
  bool includes(const ParamSpace& other) const;
  std::string describe() const;

 private:
  Kind kind_ = Kind::interval;
  double lo_ = -kInf;
  double hi_ = kInf;
  std::vector<double> points_;
};

/// Sample space descriptor. Finite spaces hold `size` points; countable
/// spaces are enumerated up to a parameter-dependent truncation chosen by
/// the model; continuum spaces are integrated with `rule` over [lo, hi].
struct SampleSpace {
  enum class Kind { finite, countable, continuum };

  Kind kind = Kind::finite;
  std::size_t size = 0;
  double lo = -kInf;
  double hi = kInf;
  QuadratureRule rule{};

  static SampleSpace finite(std::size_t n) { return {Kind::finite, n, 0.0, double(n - 1), {}}; }
  static SampleSpace countable() { return {Kind::countable, 0, 0.0, kInf, {}}; }
  static SampleSpace continuum(double lo, double hi) {
    return {Kind::continuum, 0, lo, hi, QuadratureRule{}};
  }

  bool enumerable() const noexcept { return kind != Kind::continuum; }
};

}  // namespace exmc
