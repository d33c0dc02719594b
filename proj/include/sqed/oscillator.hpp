#pragma once

#include <complex>

namespace sqed {

/// Charged-oscillator parameters.  The radiation-reaction damping
/// beta = pi e^2 / m is always derived from (e, m); the identity
/// |alpha|^2 = alpha_I / (2 pi omega) silently breaks for any other value,
/// so a mismatched beta can only be injected through the unsafe factory.
struct OscillatorParams {
  double e;      // coupling charge
  double m;      // oscillator mass
  double M;      // particle (center-of-mass) mass
  double omega0; // resonance frequency
  double beta;   // derived damping, pi e^2 / m

  static OscillatorParams make(double e, double m, double M, double omega0);

  /// omega0 = 1, beta = 0.05 (e^2/m = beta/pi), m = 1, M = 1000: the weak
  /// coupling reference set used throughout the tests and the CLI.
  static OscillatorParams defaults();

  /// Test harnesses only: beta decoupled from (e, m).
  static OscillatorParams unsafe_with_damping(double e, double m, double M,
                                              double omega0, double beta);
};

/// alpha(omega) = (e^2/m) / (omega0^2 - omega^2 - 2 i beta omega); the
/// imaginary part is strictly positive for omega > 0.
std::complex<double> polarizability(double omega, const OscillatorParams& p);

/// Im alpha(omega) by the closed form (cheaper in integrand loops).
double polarizability_imag(double omega, const OscillatorParams& p);

/// |alpha|^2 - alpha_I / (2 pi omega); identically zero (to rounding) when
/// beta = pi e^2 / m.
double alpha_identity_residual(double omega, const OscillatorParams& p);

} // namespace sqed
