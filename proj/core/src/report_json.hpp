#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "json.hpp"

#include "exmc/bound_check.hpp"

namespace exmc {

using Json = nlohmann::ordered_json;

// JSON has no infinities or NaN; those are written as strings.
inline Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline Json numbers(std::span<const double> values) {
  Json a = Json::array();
  for (double v : values) a.push_back(number(v));
  return a;
}

inline Json bound_check_json(const BoundCheckResult& r) {
  Json j;
  j["claim_id"] = r.claim_id;
  j["satisfied"] = r.satisfied;
  j["worst_margin"] = number(r.worst_margin);
  j["tolerance"] = number(r.tolerance);
  Json pts = Json::array();
  for (const auto& p : r.evaluation_points) pts.push_back(numbers(p));
  j["evaluation_points"] = std::move(pts);
  j["lhs"] = numbers(r.lhs);
  j["rhs"] = numbers(r.rhs);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace exmc
