#include "sqed/ode.hpp"

#include <algorithm>
#include <cmath>

#include "sqed/errors.hpp"

namespace sqed {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

} // namespace

std::vector<CurvePoint> solve_scalar_ode(
    const std::function<double(double, double)>& rhs, double omega_start,
    double n_start, double omega_end, const QuadratureSpec& spec) {
  if (!(omega_start > 0.0))
    throw ConfigError("solve_scalar_ode: omega_start must be > 0");

  std::vector<CurvePoint> curve;
  curve.push_back({omega_start, n_start});
  if (omega_end == omega_start) return curve;

  const double dir = (omega_end > omega_start) ? 1.0 : -1.0;
  const double h_min = 1e-14 * omega_start;
  double x = omega_start;
  double y = n_start;
  double h = dir * std::max(std::abs(omega_end - omega_start) / 100.0,
                            2.0 * h_min);
  double k1 = rhs(x, y);

  while (dir * (omega_end - x) > 0.0) {
    if (dir * (x + h) > dir * omega_end) h = omega_end - x;

    const double k2 = rhs(x + c2 * h, y + h * (a21 * k1));
    const double k3 = rhs(x + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const double k4 = rhs(x + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 =
        rhs(x + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const double k6 = rhs(
        x + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const double y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const double k7 = rhs(x + h, y5);
    const double y4 = y + h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 +
                               e6 * k6 + e7 * k7);

    const double scale =
        spec.abs_tol + spec.rel_tol * std::max(std::abs(y), std::abs(y5));
    const double err = std::abs(y5 - y4) / scale;

    if (err <= 1.0) {
      x += h;
      y = y5;
      k1 = k7; // FSAL
      curve.push_back({x, y});
    }
    const double factor =
        std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
    h *= factor;
    if (std::abs(h) < h_min)
      throw StepUnderflow("solve_scalar_ode: step size collapsed");
  }
  return curve;
}

} // namespace sqed
