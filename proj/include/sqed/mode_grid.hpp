#pragma once

#include <vector>

namespace sqed {

/// Finite quantization box of length L with N positive-k modes
/// k_j = 2 pi j / L, omega_j = k_j, C_j^2 = 2 pi / (omega_j L) (hbar = 1).
/// Only the positive modes are stored; the +-k degeneracy enters the mode
/// sums as an explicit multiplicity.
struct ModeGrid {
  double box_length = 0.0;
  int n_modes = 0;
  std::vector<double> omega; // omega_j, ascending
  std::vector<double> c_sq;  // C_j^2

  static ModeGrid make(double box_length, int n_modes);

  double spacing() const { return omega.empty() ? 0.0 : omega.front(); }
  double omega_max() const { return omega.empty() ? 0.0 : omega.back(); }
};

} // namespace sqed
