#pragma once

#include <functional>
#include <span>
#include <vector>

#include "exmc/model.hpp"

namespace exmc {

/// Sum (enumerable spaces) or integral (continuum spaces) of `integrand`
/// over the sample space. Enumeration covers every theta in `thetas`; the
/// integrand must be constant on each SupportClass. `breakpoints` mark
/// kinks of the integrand on a continuum.
double sample_space_total(const UnnormalizedModel& model, std::span<const double> thetas,
                          const std::function<double(SamplePoint)>& integrand,
                          std::span<const double> breakpoints = {});

/// Points where log_c + log f_a(x) - log f_b(x) changes sign, searched over
/// the effective supports of both parameters. Continuum spaces only.
std::vector<double> ratio_crossings(const UnnormalizedModel& model, double theta_a,
                                    double theta_b, double log_c);

/// E_{w ~ p_to}[ min(1, exp(log_c) * f_from(w) / f_to(w)) ], computed
/// exactly by enumeration or by quadrature split at the crossing points.
double expected_capped_ratio(const UnnormalizedModel& model, double from, double to,
                             double log_c);

}  // namespace exmc
