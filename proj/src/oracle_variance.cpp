#include "sqed/oracle_variance.hpp"

#include <cmath>

#include "sqed/errors.hpp"
#include "sqed/quadrature.hpp"

namespace sqed {

namespace {

struct ModeWeights {
  std::vector<double> row;    // C_K^2 omega_K^4 |alpha(omega_K)|^2
  std::vector<double> col;    // C_k^2 omega_k^2
  std::vector<double> n;      // occupation per mode
};

ModeWeights make_weights(const ModeGrid& grid, const Occupation& occ,
                         const OscillatorParams& p) {
  const int n_modes = grid.n_modes;
  ModeWeights w;
  w.row.resize(n_modes);
  w.col.resize(n_modes);
  w.n.resize(n_modes);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n_modes; ++j) {
    const double omega = grid.omega[j];
    const double w2 = omega * omega;
    w.row[j] = grid.c_sq[j] * w2 * w2 * std::norm(polarizability(omega, p));
    w.col[j] = grid.c_sq[j] * w2;
    w.n[j] = occ(omega);
  }
  return w;
}

void require_resolved(const ModeGrid& grid, const OscillatorParams& p) {
  if (grid.spacing() > p.beta)
    throw GridTooCoarse("mode spacing exceeds the resonance width beta");
}

void require_in_window(double t, const ModeGrid& grid) {
  if (t < 0.0) throw ConfigError("discrete_variance: t must be >= 0");
  if (t >= 0.5 * grid.box_length)
    throw ConfigError("discrete_variance: t beyond the box echo time L/2");
}

} // namespace

double finite_time_kernel(double delta, double t) {
  const double x = 0.5 * delta * t;
  if (std::abs(delta * t) < 1e-6) return t * t * (1.0 - x * x / 3.0);
  const double s = std::sin(x);
  return s * s / (0.25 * delta * delta);
}

double discrete_variance(double t, const ModeGrid& grid, const Occupation& occ,
                         const OscillatorParams& p) {
  require_resolved(grid, p);
  require_in_window(t, grid);
  if (occ.identically_zero() || t == 0.0) return 0.0;

  const int n_modes = grid.n_modes;
  const ModeWeights w = make_weights(grid, occ, p);

  // Half-angle tables make the inner loop trig-free:
  // sin((omega_K - omega_k) t / 2) = s_K c_k - c_K s_k.
  std::vector<double> sin_half(n_modes), cos_half(n_modes);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n_modes; ++j) {
    sin_half[j] = std::sin(0.5 * grid.omega[j] * t);
    cos_half[j] = std::cos(0.5 * grid.omega[j] * t);
  }

  std::vector<double> row_sum(n_modes);
#pragma omp parallel for schedule(static)
  for (int K = 0; K < n_modes; ++K) {
    const double nK = w.n[K];
    const double sK = sin_half[K], cK = cos_half[K];
    const double omegaK = grid.omega[K];
    double acc = 0.0;
    for (int k = 0; k < n_modes; ++k) {
      double kernel;
      if (k == K) {
        kernel = t * t;
      } else {
        const double s = sK * cos_half[k] - cK * sin_half[k];
        const double half_delta = 0.5 * (omegaK - grid.omega[k]);
        kernel = s * s / (half_delta * half_delta);
      }
      const double nk = w.n[k];
      const double bracket = nK * (nk + 1.0) + (nK + 1.0) * nk;
      acc += w.col[k] * bracket * kernel;
    }
    row_sum[K] = w.row[K] * acc;
  }
  return 4.0 * pairwise_sum(row_sum);
}

double discrete_variance_reference(double t, const ModeGrid& grid,
                                   const Occupation& occ,
                                   const OscillatorParams& p) {
  require_resolved(grid, p);
  require_in_window(t, grid);
  if (occ.identically_zero() || t == 0.0) return 0.0;

  const int n_modes = grid.n_modes;
  const ModeWeights w = make_weights(grid, occ, p);
  std::vector<double> row_sum(n_modes);
  for (int K = 0; K < n_modes; ++K) {
    double acc = 0.0;
    for (int k = 0; k < n_modes; ++k) {
      const double bracket =
          w.n[K] * (w.n[k] + 1.0) + (w.n[K] + 1.0) * w.n[k];
      acc += w.col[k] * bracket *
             finite_time_kernel(grid.omega[K] - grid.omega[k], t);
    }
    row_sum[K] = w.row[K] * acc;
  }
  return 4.0 * pairwise_sum(row_sum);
}

double equal_frequency_coefficient(const ModeGrid& grid, const Occupation& occ,
                                   const OscillatorParams& p) {
  const ModeWeights w = make_weights(grid, occ, p);
  std::vector<double> terms(grid.n_modes);
  for (int j = 0; j < grid.n_modes; ++j) {
    const double nj = w.n[j];
    terms[j] = w.row[j] * w.col[j] * 2.0 * (nj * nj + nj);
  }
  return 4.0 * pairwise_sum(terms);
}

double antiresonant_variance(double t, const ModeGrid& grid,
                             const Occupation& occ, const OscillatorParams& p) {
  require_resolved(grid, p);
  require_in_window(t, grid);

  const int n_modes = grid.n_modes;
  const ModeWeights w = make_weights(grid, occ, p);
  std::vector<double> row_sum(n_modes);
#pragma omp parallel for schedule(static)
  for (int K = 0; K < n_modes; ++K) {
    double acc = 0.0;
    for (int k = 0; k < n_modes; ++k) {
      const double bracket =
          (w.n[K] + 1.0) * (w.n[k] + 1.0) + w.n[K] * w.n[k];
      acc += w.col[k] * bracket *
             finite_time_kernel(grid.omega[K] + grid.omega[k], t);
    }
    row_sum[K] = w.row[K] * acc;
  }
  return 4.0 * pairwise_sum(row_sum);
}

VarianceCurve variance_curve(const ModeGrid& grid, const Occupation& occ,
                             const OscillatorParams& p,
                             const std::vector<double>& times, double fit_t_min,
                             double fit_t_max) {
  if (times.size() < 2)
    throw ConfigError("variance_curve: need at least 2 time samples");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw ConfigError("variance_curve: times must be strictly increasing");

  VarianceCurve curve;
  curve.times = times;
  curve.values.reserve(times.size());
  for (double t : times)
    curve.values.push_back(discrete_variance(t, grid, occ, p));
  curve.equal_frequency_coeff = equal_frequency_coefficient(grid, occ, p);
  curve.fit_t_min = fit_t_min;
  curve.fit_t_max = fit_t_max;

  // OLS on the window, equal-frequency sheet removed.
  double sum_t = 0.0, sum_v = 0.0, sum_tt = 0.0, sum_tv = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    if (t < fit_t_min || t > fit_t_max) continue;
    const double v = curve.values[i] - curve.equal_frequency_coeff * t * t;
    sum_t += t;
    sum_v += v;
    sum_tt += t * t;
    sum_tv += t * v;
    ++count;
  }
  if (count < 2)
    throw ConfigError("variance_curve: fewer than 2 samples in the fit window");
  const double denom = count * sum_tt - sum_t * sum_t;
  curve.fitted_slope = (count * sum_tv - sum_t * sum_v) / denom;
  return curve;
}

} // namespace sqed
