#pragma once

#include "sqed/occupation.hpp"

namespace sqed {

/// Parallel boost with |v| < 1 (c = 1); gamma is derived, never user-set.
struct LorentzBoost {
  double v;
  double gamma;
  explicit LorentzBoost(double velocity);
};

/// Frequency seen in the rest frame for a co-moving-frame mode omega_prime
/// travelling along (+1) or against (-1) the boost: gamma omega' (1 + dir v).
double doppler_shift(double omega_prime, const LorentzBoost& boost,
                     int direction);

/// 2D scalar spectral energy density rho(omega) = (omega/pi)(n(omega) + 1/2).
double spectral_density(double omega, const Occupation& occ);

/// Lorentz-transformed density rho'(omega') = (omega'/pi)[n(gamma omega'(1+v)) + 1/2].
double transformed_spectral_density(double omega_prime, const Occupation& occ,
                                    const LorentzBoost& boost);

} // namespace sqed
