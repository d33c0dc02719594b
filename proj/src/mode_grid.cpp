#include "sqed/mode_grid.hpp"

#include <numbers>

#include "sqed/errors.hpp"

namespace sqed {

ModeGrid ModeGrid::make(double box_length, int n_modes) {
  if (!(box_length > 0.0)) throw ConfigError("ModeGrid: L must be > 0");
  if (n_modes < 1) throw ConfigError("ModeGrid: N must be >= 1");
  ModeGrid grid;
  grid.box_length = box_length;
  grid.n_modes = n_modes;
  grid.omega.resize(n_modes);
  grid.c_sq.resize(n_modes);
  const double dk = 2.0 * std::numbers::pi / box_length;
  for (int j = 1; j <= n_modes; ++j) {
    grid.omega[j - 1] = dk * j;
    grid.c_sq[j - 1] = 2.0 * std::numbers::pi / (grid.omega[j - 1] * box_length);
  }
  return grid;
}

} // namespace sqed
