#include "sqed/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "sqed/errors.hpp"

namespace sqed {

LorentzBoost::LorentzBoost(double velocity) : v(velocity) {
  if (!(std::abs(velocity) < 1.0))
    throw ConfigError("LorentzBoost: |v| < 1 required");
  gamma = 1.0 / std::sqrt((1.0 - velocity) * (1.0 + velocity));
}

double doppler_shift(double omega_prime, const LorentzBoost& boost,
                     int direction) {
  return boost.gamma * omega_prime * (1.0 + direction * boost.v);
}

double spectral_density(double omega, const Occupation& occ) {
  return omega / std::numbers::pi * (occ(omega) + 0.5);
}

double transformed_spectral_density(double omega_prime, const Occupation& occ,
                                    const LorentzBoost& boost) {
  const double shifted = doppler_shift(omega_prime, boost, +1);
  return omega_prime / std::numbers::pi * (occ(shifted) + 0.5);
}

} // namespace sqed
