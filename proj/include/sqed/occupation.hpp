#pragma once

#include <string>
#include <vector>

namespace sqed {

/// Planck mean photon number 1/(e^{omega/T} - 1) in natural units
/// (hbar = k_B = 1).  T = 0 is the vacuum limit and returns 0; small
/// omega/T switches to the Laurent series to avoid cancellation.
double planck_occupation(double omega, double temperature);

/// d/domega of the Planck occupation via the closed form -(1/T)(n^2 + n).
double planck_occupation_derivative(double omega, double temperature);

/// Mean photon number n(omega): Planck at temperature T, identically zero,
/// or a tabulated grid.  Tabulated occupations interpolate log-linearly in
/// omega (linearly where a grid value is 0) and clamp outside the grid.
class Occupation {
public:
  enum class Kind { Planck, Zero, Tabulated };

  static Occupation planck(double temperature);
  static Occupation zero();
  static Occupation tabulated(std::vector<std::pair<double, double>> grid);
  /// Two-column CSV (omega, n), header row required, omega strictly
  /// increasing.  Throws IoError if unreadable, ConfigError if malformed.
  static Occupation from_csv(const std::string& path);

  double operator()(double omega) const;
  /// dn/domega: closed form for Planck, zero for Zero, centered differences
  /// on the grid for Tabulated (throws DerivativeUnavailable below 3 points).
  double derivative(double omega) const;

  Kind kind() const { return kind_; }
  double temperature() const { return temperature_; }
  bool identically_zero() const;

private:
  Occupation() = default;
  Kind kind_ = Kind::Zero;
  double temperature_ = 0.0;
  std::vector<double> grid_omega_;
  std::vector<double> grid_n_;
};

} // namespace sqed
