#include "sqed/occupation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sqed/errors.hpp"

namespace sqed {

double planck_occupation(double omega, double temperature) {
  if (temperature == 0.0) return 0.0;
  const double x = omega / temperature;
  if (x < 1e-6) return 1.0 / x - 0.5 + x / 12.0; // 1/(e^x-1) Laurent series
  return 1.0 / std::expm1(x);
}

double planck_occupation_derivative(double omega, double temperature) {
  if (temperature == 0.0) return 0.0;
  const double n = planck_occupation(omega, temperature);
  return -(n * n + n) / temperature;
}

Occupation Occupation::planck(double temperature) {
  if (temperature < 0.0)
    throw ConfigError("Occupation::planck: temperature must be >= 0");
  Occupation occ;
  occ.kind_ = Kind::Planck;
  occ.temperature_ = temperature;
  return occ;
}

Occupation Occupation::zero() {
  Occupation occ;
  occ.kind_ = Kind::Zero;
  return occ;
}

Occupation Occupation::tabulated(std::vector<std::pair<double, double>> grid) {
  if (grid.empty()) throw ConfigError("Occupation::tabulated: empty grid");
  Occupation occ;
  occ.kind_ = Kind::Tabulated;
  double prev = 0.0;
  for (const auto& [omega, n] : grid) {
    if (!(omega > prev))
      throw ConfigError("Occupation::tabulated: omega must be strictly "
                        "increasing and positive");
    if (n < 0.0 || !std::isfinite(n))
      throw ConfigError("Occupation::tabulated: n must be finite and >= 0");
    occ.grid_omega_.push_back(omega);
    occ.grid_n_.push_back(n);
    prev = omega;
  }
  return occ;
}

Occupation Occupation::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open occupation table: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw ConfigError("occupation table is empty: " + path);
  // Header row is mandatory; it is not interpreted.
  std::vector<std::pair<double, double>> grid;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b))
      throw ConfigError("occupation table: expected two columns at line " +
                        std::to_string(line_no));
    try {
      grid.emplace_back(std::stod(a), std::stod(b));
    } catch (const std::exception&) {
      throw ConfigError("occupation table: non-numeric entry at line " +
                        std::to_string(line_no));
    }
  }
  return tabulated(std::move(grid));
}

double Occupation::operator()(double omega) const {
  switch (kind_) {
    case Kind::Planck:
      return planck_occupation(omega, temperature_);
    case Kind::Zero:
      return 0.0;
    case Kind::Tabulated:
      break;
  }
  if (omega <= grid_omega_.front()) return grid_n_.front();
  if (omega >= grid_omega_.back()) return grid_n_.back();
  const auto it =
      std::upper_bound(grid_omega_.begin(), grid_omega_.end(), omega);
  const std::size_t hi = it - grid_omega_.begin();
  const std::size_t lo = hi - 1;
  const double t = (omega - grid_omega_[lo]) /
                   (grid_omega_[hi] - grid_omega_[lo]);
  const double n0 = grid_n_[lo], n1 = grid_n_[hi];
  if (n0 > 0.0 && n1 > 0.0)
    return std::exp((1.0 - t) * std::log(n0) + t * std::log(n1));
  return (1.0 - t) * n0 + t * n1;
}

double Occupation::derivative(double omega) const {
  switch (kind_) {
    case Kind::Planck:
      return planck_occupation_derivative(omega, temperature_);
    case Kind::Zero:
      return 0.0;
    case Kind::Tabulated:
      break;
  }
  if (grid_omega_.size() < 3)
    throw DerivativeUnavailable(
        "Occupation::derivative: tabulated grid has fewer than 3 points");
  if (omega <= grid_omega_.front() || omega >= grid_omega_.back()) return 0.0;
  const auto it =
      std::upper_bound(grid_omega_.begin(), grid_omega_.end(), omega);
  std::size_t i = it - grid_omega_.begin();
  i = std::clamp<std::size_t>(i, 1, grid_omega_.size() - 2);
  return (grid_n_[i + 1] - grid_n_[i - 1]) /
         (grid_omega_[i + 1] - grid_omega_[i - 1]);
}

bool Occupation::identically_zero() const {
  if (kind_ == Kind::Zero) return true;
  if (kind_ == Kind::Planck) return temperature_ == 0.0;
  return std::all_of(grid_n_.begin(), grid_n_.end(),
                     [](double n) { return n == 0.0; });
}

} // namespace sqed
