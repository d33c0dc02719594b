#pragma once

#include <functional>
#include <vector>

#include "sqed/quadrature.hpp"

namespace sqed {

struct CurvePoint {
  double omega;
  double n;
};

/// Adaptive embedded 5(4) integration of dn/domega = rhs(omega, n) from
/// (omega_start, n_start) to omega_end (either direction).  Returns the
/// accepted-step samples, endpoints included, ordered along the direction of
/// integration.  Throws StepUnderflow when |h| < 1e-14 * omega_start.
std::vector<CurvePoint> solve_scalar_ode(
    const std::function<double(double, double)>& rhs, double omega_start,
    double n_start, double omega_end, const QuadratureSpec& spec);

} // namespace sqed
