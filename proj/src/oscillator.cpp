#include "sqed/oscillator.hpp"

#include <cmath>
#include <numbers>

#include "sqed/errors.hpp"

namespace sqed {

namespace {
constexpr double pi = std::numbers::pi;

void check(double e, double m, double M, double omega0) {
  if (e == 0.0) throw ConfigError("OscillatorParams: e must be nonzero");
  if (!(m > 0.0)) throw ConfigError("OscillatorParams: m must be > 0");
  if (!(M > 0.0)) throw ConfigError("OscillatorParams: M must be > 0");
  if (!(omega0 > 0.0)) throw ConfigError("OscillatorParams: omega0 must be > 0");
}
} // namespace

OscillatorParams OscillatorParams::make(double e, double m, double M,
                                        double omega0) {
  check(e, m, M, omega0);
  return {e, m, M, omega0, pi * e * e / m};
}

OscillatorParams OscillatorParams::defaults() {
  const double beta = 0.05;
  return make(std::sqrt(beta / pi), 1.0, 1000.0, 1.0);
}

OscillatorParams OscillatorParams::unsafe_with_damping(double e, double m,
                                                       double M, double omega0,
                                                       double beta) {
  check(e, m, M, omega0);
  if (!(beta > 0.0)) throw ConfigError("OscillatorParams: beta must be > 0");
  return {e, m, M, omega0, beta};
}

std::complex<double> polarizability(double omega, const OscillatorParams& p) {
  const double strength = p.e * p.e / p.m;
  const std::complex<double> denom(p.omega0 * p.omega0 - omega * omega,
                                   -2.0 * p.beta * omega);
  return strength / denom;
}

double polarizability_imag(double omega, const OscillatorParams& p) {
  const double strength = p.e * p.e / p.m;
  const double re = p.omega0 * p.omega0 - omega * omega;
  const double im = 2.0 * p.beta * omega;
  return strength * im / (re * re + im * im);
}

double alpha_identity_residual(double omega, const OscillatorParams& p) {
  const std::complex<double> alpha = polarizability(omega, p);
  return std::norm(alpha) - alpha.imag() / (2.0 * pi * omega);
}

} // namespace sqed
