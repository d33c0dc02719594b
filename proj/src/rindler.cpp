#include "sqed/rindler.hpp"

#include <cmath>
#include <numbers>

#include "sqed/complex_gamma.hpp"
#include "sqed/errors.hpp"
#include "sqed/spectrum.hpp"

namespace sqed {

namespace {
constexpr double pi = std::numbers::pi;
constexpr std::complex<double> iu{0.0, 1.0};
} // namespace

RindlerParams::RindlerParams(double accel) : a(accel) {
  if (!(accel > 0.0)) throw ConfigError("RindlerParams: a must be > 0");
  t_du = accel / (2.0 * pi);
}

LabEvent trajectory(double tau, const RindlerParams& r) {
  return {std::sinh(r.a * tau) / r.a, std::cosh(r.a * tau) / r.a};
}

std::complex<double> xi_eta_closed_form(double omega, double Omega,
                                        const RindlerParams& r,
                                        DopplerKernel which) {
  if (!(omega > 0.0) || !(Omega > 0.0))
    throw ConfigError("xi_eta_closed_form: omega, Omega must be > 0");
  const double y = Omega / r.a;
  const double half_exponent = (which == DopplerKernel::Xi) ? -0.5 : 0.5;
  // Assembled in log space so the unimodular phase and the e^{+-pi Omega/2a}
  // factor cannot overflow separately.
  const std::complex<double> log_val = log_gamma_complex(iu * y) -
                                       iu * y * std::log(omega / r.a) +
                                       half_exponent * pi * y;
  return std::exp(log_val) / r.a;
}

GammaIdentity gamma_identity(double Omega, const RindlerParams& r) {
  if (!(Omega > 0.0)) throw ConfigError("gamma_identity: Omega must be > 0");
  const double y = Omega / r.a;
  GammaIdentity out;
  out.lhs = std::exp(4.0 * log_gamma_complex(iu * y).real());
  const double sh = std::sinh(pi * y);
  out.rhs = pi * pi / (y * y * sh * sh);
  return out;
}

CorrelatorWeights correlator_weights(double Omega, const RindlerParams& r) {
  if (!(Omega > 0.0))
    throw ConfigError("correlator_weights: Omega must be > 0");
  const double y = Omega / r.a;
  const double log_abs2 = 2.0 * log_gamma_complex(iu * y).real();
  const double prefactor = 1.0 / (2.0 * pi * r.a);
  return {prefactor * std::exp(log_abs2 - pi * y),
          prefactor * std::exp(log_abs2 + pi * y)};
}

RindlerDiffusion rindler_diffusion_rate(const RindlerParams& r,
                                        const OscillatorParams& p,
                                        const QuadratureSpec& spec) {
  RindlerDiffusion out;

  // Route A: |Gamma(i Omega/a)|^4 weights; the integrand decays like
  // e^{-2 pi Omega/a} so the window must cover several units of a.
  auto integrand = [&](double Omega) {
    const double y = Omega / r.a;
    const double gamma4 = std::exp(4.0 * log_gamma_complex(iu * y).real());
    const double w2 = Omega * Omega;
    return w2 * w2 * w2 * std::norm(polarizability(Omega, p)) * gamma4;
  };
  QuadratureSpec s = spec;
  s.omega_max = std::max({spec.omega_max, 8.0 * p.omega0, 4.0 * r.a});
  const IntegralResult res = integrate_semi_infinite(integrand, s);
  out.gamma_route.value = 4.0 / (pi * r.a * r.a) * res.value;
  out.gamma_route.estimated_error = 4.0 / (pi * r.a * r.a) * res.error_estimate;
  out.gamma_route.cutoff_used = res.cutoff;

  // Route B: the thermal formula at the Davies-Unruh temperature.
  out.thermal_route = diffusion_rate(Occupation::planck(r.t_du), p, spec);
  return out;
}

KineticsResult rindler_drag(double v, const RindlerParams& r,
                            const OscillatorParams& p,
                            const QuadratureSpec& spec, RindlerDragForm form) {
  if (!(std::abs(v) < 1.0)) throw ConfigError("rindler_drag: |v| < 1 required");

  if (form == RindlerDragForm::NetLinearized)
    return drag_force(v, Occupation::planck(r.t_du), p, spec,
                      DragForm::Linearized);

  if (spec.tail_policy != TailPolicy::Fixed)
    throw CutoffRequired(
        "rindler_drag: the coth form is log-divergent; use a fixed cutoff");
  auto integrand = [&](double Omega) {
    // coth(pi Omega/a) -> a/(pi Omega) as Omega -> 0 keeps the product finite.
    return Omega * Omega * polarizability_imag(Omega, p) /
           std::tanh(pi * Omega / r.a);
  };
  KineticsResult out;
  double err = 0.0;
  out.value = integrate_finite(integrand, 0.0, spec.omega_max, spec, &err);
  out.estimated_error = err;
  out.cutoff_used = spec.omega_max;
  return out;
}

double rindler_transformed_density(double omega_prime, double v,
                                   const RindlerParams& r) {
  return transformed_spectral_density(omega_prime, Occupation::planck(r.t_du),
                                      LorentzBoost(v));
}

} // namespace sqed
