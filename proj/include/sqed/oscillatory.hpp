#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sqed/quadrature.hpp"

namespace sqed {

/// Regularized value of  integral dtau e^{i Omega tau} e^{sign i (omega/a) e^{a tau}}
/// over the whole real line.  For each epsilon in spec.epsilon_ladder the
/// integrand is damped by e^{-eps |tau|} (eps = entry * a), then the ladder is
/// extrapolated polynomially to eps -> 0.  Throws ExtrapolationUnstable when
/// the extrapolants fail the monotone Cauchy criterion.
std::complex<double> oscillatory_phase_integral(double omega, double Omega,
                                                double a, int sign,
                                                const QuadratureSpec& spec);

namespace detail {

/// Abel-regularized integral over (-inf, -T0] of the damped phase integrand,
/// as a fast-converging series in (omega/a) e^{-a T0}.  max_terms caps the
/// series order (each term gains a factor (omega/a) e^{-a T0} / m).
std::complex<double> chirp_lower_tail(double omega, double Omega, double a,
                                      int sign, double eps, double t0,
                                      int max_terms = 40);

/// Damped tail integral over [t1, inf): e^{(i Omega - eps) t1} / a times
/// integral_1^inf u^{(i Omega - eps)/a - 1} e^{sign i W u} du with
/// W = (omega/a) e^{a t1}, summed over half-period panels and accelerated
/// with Wynn's epsilon algorithm.
std::complex<double> chirp_upper_tail(double omega, double Omega, double a,
                                      int sign, double eps, double t1);

/// Quadrature of the damped phase integrand over [-t0, t1] on a phase-aware
/// initial mesh.  eps = 0 gives the sharp (undamped) finite integral.
std::complex<double> chirp_core(double omega, double Omega, double a, int sign,
                                double eps, double t0, double t1,
                                const QuadratureSpec& spec);

/// Polynomial (Neville) extrapolation of values sampled at ladder points to
/// zero.  Fills extrapolants with the diagonal sequence; the caller checks
/// convergence.
std::complex<double> extrapolate_to_zero(
    std::span<const double> ladder, std::span<const std::complex<double>> vals,
    std::vector<std::complex<double>>* extrapolants = nullptr);

/// Wynn epsilon acceleration of a sequence of complex partial sums.
std::complex<double> wynn_epsilon(std::span<const std::complex<double>> sums);

} // namespace detail

} // namespace sqed
