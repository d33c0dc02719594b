#pragma once

#include <complex>

#include "sqed/oscillator.hpp"
#include "sqed/quadrature.hpp"
#include "sqed/thermal_kinetics.hpp"

namespace sqed {

/// Uniform proper acceleration a, with the derived Davies-Unruh temperature
/// T_DU = a / 2 pi (hbar = k_B = c = 1).
struct RindlerParams {
  double a;
  double t_du;
  explicit RindlerParams(double accel);
};

struct LabEvent {
  double t;
  double y;
};

/// Hyperbolic worldline t = sinh(a tau)/a, y = cosh(a tau)/a.
LabEvent trajectory(double tau, const RindlerParams& r);

enum class DopplerKernel { Xi, Eta };

/// Closed forms of the accelerated observer's Doppler kernels:
///   xi  = (1/a) Gamma(i Omega/a) (omega/a)^{-i Omega/a} e^{-pi Omega/2a}
///   eta = same with e^{+pi Omega/2a}.
std::complex<double> xi_eta_closed_form(double omega, double Omega,
                                        const RindlerParams& r,
                                        DopplerKernel which);

struct GammaIdentity {
  double lhs; // |Gamma(i Omega/a)|^4 via log_gamma_complex
  double rhs; // pi^2 a^2 / Omega^2 / sinh^2(pi Omega / a)
};

GammaIdentity gamma_identity(double Omega, const RindlerParams& r);

/// Correlator weights of the delta functions in <g g^dag> and <g^dag g>;
/// their ratio is the KMS factor e^{2 pi Omega / a} = e^{Omega / T_DU}.
/// The factor 2 for k < 0 modes is applied in rindler_diffusion_rate, not
/// here, so these match the single-sided correlators literally.
struct CorrelatorWeights {
  double w_gg_dag;
  double w_gdag_g;
};

CorrelatorWeights correlator_weights(double Omega, const RindlerParams& r);

/// Momentum diffusion rate in hyperbolic motion, computed two ways:
///   gamma_route: (4 / pi a^2) int Omega^6 |alpha|^2 |Gamma(i Omega/a)|^4
///                (|Gamma|^4 evaluated through log_gamma_complex; includes
///                the factor 2 for k < 0 modes)
///   thermal_route: diffusion_rate with a Planck occupation at T_DU.
/// The two pipelines share no code path for the occupation factor.
struct RindlerDiffusion {
  KineticsResult gamma_route;
  KineticsResult thermal_route;
};

RindlerDiffusion rindler_diffusion_rate(const RindlerParams& r,
                                        const OscillatorParams& p,
                                        const QuadratureSpec& spec);

enum class RindlerDragForm { CothTotal, NetLinearized };

/// CothTotal: F = int_0^cutoff Omega^2 alpha_I coth(pi Omega/a), the
/// un-subtracted v = 0 form; log-divergent, so it demands a fixed cutoff
/// (CutoffRequired otherwise) and reports the cutoff used.
/// NetLinearized: the net force 4 v int omega^3 alpha_I dn/domega with n at
/// T_DU -- the same integral as the thermal linearized drag and delegated
/// to it.
KineticsResult rindler_drag(double v, const RindlerParams& r,
                            const OscillatorParams& p,
                            const QuadratureSpec& spec, RindlerDragForm form);

/// Spectral density the heuristic argument assigns to a moving accelerated
/// particle: the Lorentz-transformed density with the T_DU Planck occupation.
double rindler_transformed_density(double omega_prime, double v,
                                   const RindlerParams& r);

} // namespace sqed
