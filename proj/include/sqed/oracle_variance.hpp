#pragma once

#include <vector>

#include "sqed/mode_grid.hpp"
#include "sqed/occupation.hpp"
#include "sqed/oscillator.hpp"

namespace sqed {

/// sin^2(Delta t / 2) / (Delta / 2)^2, with the Delta -> 0 limit t^2 taken
/// analytically for |Delta t| < 1e-6.  Even in Delta and bounded by t^2.
double finite_time_kernel(double delta, double t);

/// Exact finite-box momentum variance at time t (the resonant f-kernel
/// terms of the mode double sum, anti-resonant g terms dropped):
///   <P_y^2(t)> = 4 sum_{K,k>0} C_K^2 C_k^2 omega_K^4 omega_k^2 |alpha(omega_K)|^2
///                  [ (n_K+1) n_k + n_K (n_k+1) ] |f_Kk(t)|^2,
/// the overall 4 counting the +-K, +-k sign degeneracy at Y = 0.  Equal-mode
/// (K = k) terms are included.  OpenMP row-parallel with a deterministic
/// pairwise reduction: results are bitwise identical for any worker count.
/// Requires t < L/2 (no box echo) and mode spacing below beta
/// (GridTooCoarse otherwise).
double discrete_variance(double t, const ModeGrid& grid, const Occupation& occ,
                         const OscillatorParams& p);

/// Plain serial double loop over finite_time_kernel; kept as the reference
/// implementation the fast kernel is tested against.
double discrete_variance_reference(double t, const ModeGrid& grid,
                                   const Occupation& occ,
                                   const OscillatorParams& p);

/// Coefficient S of the equal-frequency sheet: every pair with
/// omega_K = omega_k contributes kernel t^2 exactly, so their total is
/// S t^2.  This sheet is a finite-box artifact absent from the continuum
/// double integral; its share of the variance vanishes as t/L.
double equal_frequency_coefficient(const ModeGrid& grid, const Occupation& occ,
                                   const OscillatorParams& p);

/// Diagnostic: the dropped anti-resonant g-kernel contribution
///   4 sum C_K^2 C_k^2 omega_K^4 omega_k^2 |alpha|^2
///       [ (n_K+1)(n_k+1) + n_K n_k ] sin^2(Sigma t/2) / (Sigma/2)^2,
/// Sigma = omega_K + omega_k.  Bounded in t.
double antiresonant_variance(double t, const ModeGrid& grid,
                             const Occupation& occ, const OscillatorParams& p);

struct VarianceCurve {
  std::vector<double> times;
  std::vector<double> values;          // full variance, equal-frequency sheet included
  double equal_frequency_coeff = 0.0;  // S above
  double fitted_slope = 0.0;           // OLS slope of values - S t^2 on the window
  double fit_t_min = 0.0;
  double fit_t_max = 0.0;
};

/// Variance samples at the given times plus the OLS slope over
/// [fit_t_min, fit_t_max].  The fit removes the exactly-quadratic
/// equal-frequency sheet so the slope is the continuum-comparable rate.
VarianceCurve variance_curve(const ModeGrid& grid, const Occupation& occ,
                             const OscillatorParams& p,
                             const std::vector<double>& times, double fit_t_min,
                             double fit_t_max);

} // namespace sqed
