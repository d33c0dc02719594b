#include "sqed/oscillatory.hpp"

#include <cmath>
#include <numbers>

#include "sqed/errors.hpp"

namespace sqed {

namespace {
constexpr std::complex<double> iu{0.0, 1.0};
}

namespace detail {

std::complex<double> chirp_lower_tail(double omega, double Omega, double a,
                                      int sign, double eps, double t0,
                                      int max_terms) {
  // integral_{-inf}^{-t0} e^{(eps + i Omega) tau} e^{sign i (omega/a) e^{a tau}} dtau
  //   = sum_m (sign i omega/a)^m / m! * e^{-(eps + i Omega + m a) t0} / (eps + i Omega + m a)
  const std::complex<double> x = double(sign) * iu * (omega / a);
  std::complex<double> prefactor = 1.0;
  std::complex<double> acc = 0.0;
  for (int m = 0; m < max_terms; ++m) {
    const std::complex<double> denom = eps + iu * Omega + double(m) * a;
    const std::complex<double> term =
        prefactor * std::exp(-denom * t0) / denom;
    acc += term;
    if (std::abs(term) < 1e-18 * (std::abs(acc) + 1e-30)) break;
    prefactor *= x / double(m + 1);
  }
  return acc;
}

std::complex<double> wynn_epsilon(std::span<const std::complex<double>> sums) {
  const std::size_t n = sums.size();
  std::vector<std::complex<double>> prev(n + 1, 0.0);
  std::vector<std::complex<double>> cur(sums.begin(), sums.end());
  std::complex<double> best = sums.back();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::complex<double>> next(n - k);
    for (std::size_t m = 0; m + k < n; ++m) {
      const std::complex<double> d = cur[m + 1] - cur[m];
      next[m] = (d == 0.0) ? prev[m + 1] : prev[m + 1] + 1.0 / d;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0 && !cur.empty()) best = cur.back();
  }
  return best;
}

std::complex<double> chirp_upper_tail(double omega, double Omega, double a,
                                      int sign, double eps, double t1) {
  // u = e^{a (tau - t1)} maps [t1, inf) to [1, inf) with a linear chirp
  // frequency W; the half-period panel sums alternate and Wynn acceleration
  // extracts the limit.
  const double w_freq = (omega / a) * std::exp(a * t1);
  const std::complex<double> s = (iu * Omega - eps) / a;
  const double du = std::numbers::pi / w_freq;

  auto g = [&](double u) {
    return std::exp((s - 1.0) * std::log(u) +
                    double(sign) * iu * (w_freq * u));
  };

  // 16-point Gauss per half-period panel is ample (< pi radians of phase).
  static const double gx[8] = {0.0950125098376374, 0.2816035507792589,
                               0.4580167776572274, 0.6178762444026438,
                               0.7554044083550030, 0.8656312023878318,
                               0.9445750230732326, 0.9894009349916499};
  static const double gw[8] = {0.1894506104550685, 0.1826034150449236,
                               0.1691565193950025, 0.1495959888165767,
                               0.1246289712555339, 0.0951585116824928,
                               0.0622535239386479, 0.0271524594117541};

  constexpr int n_panels = 48;
  std::vector<std::complex<double>> partial(n_panels);
  std::complex<double> acc = 0.0;
  for (int m = 0; m < n_panels; ++m) {
    const double pa = 1.0 + m * du, pb = pa + du;
    const double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
    std::complex<double> panel = 0.0;
    for (int i = 0; i < 8; ++i)
      panel += gw[i] * (g(mid + half * gx[i]) + g(mid - half * gx[i]));
    acc += half * panel;
    partial[m] = acc;
  }
  const std::complex<double> tail = wynn_epsilon(partial);
  return std::exp((iu * Omega - eps) * t1) / a * tail;
}

std::complex<double> chirp_core(double omega, double Omega, double a, int sign,
                                double eps, double t0, double t1,
                                const QuadratureSpec& spec) {
  // Phase-aware initial mesh: panel width tracks 1/|dPhi/dtau| so each panel
  // holds a bounded number of radians; tau = 0 is a breakpoint (|tau| kink).
  std::vector<double> pts;
  pts.push_back(-t0);
  double t = -t0;
  bool crossed_zero = !(t0 > 0.0);
  while (t < t1) {
    const double rate =
        std::abs(Omega + sign * omega * std::exp(a * t)) + 0.2 * a;
    double dt = std::min(1.5 / rate, 0.5 / a);
    double tn = std::min(t + dt, t1);
    if (!crossed_zero && tn >= 0.0) {
      tn = 0.0;
      crossed_zero = true;
      if (tn <= t) { // already at zero
        t = 0.0;
        continue;
      }
    }
    pts.push_back(tn);
    t = tn;
  }

  auto f = [&](double tau) {
    return std::exp(std::complex<double>(-eps * std::abs(tau), 0.0) +
                    iu * (Omega * tau) +
                    double(sign) * iu * ((omega / a) * std::exp(a * tau)));
  };
  return integrate_finite_complex(f, pts, spec);
}

std::complex<double> extrapolate_to_zero(
    std::span<const double> ladder, std::span<const std::complex<double>> vals,
    std::vector<std::complex<double>>* extrapolants) {
  const std::size_t n = ladder.size();
  std::vector<std::complex<double>> tab(vals.begin(), vals.end());
  if (extrapolants) {
    extrapolants->clear();
    extrapolants->push_back(tab[0]);
  }
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t m = 0; m + k < n; ++m)
      tab[m] = (ladder[m + k] * tab[m] - ladder[m] * tab[m + 1]) /
               (ladder[m + k] - ladder[m]);
    if (extrapolants) extrapolants->push_back(tab[0]);
  }
  return tab[0];
}

} // namespace detail

std::complex<double> oscillatory_phase_integral(double omega, double Omega,
                                                double a, int sign,
                                                const QuadratureSpec& spec) {
  spec.validate();
  if (!(omega > 0.0) || !(Omega > 0.0) || !(a > 0.0))
    throw ConfigError("oscillatory_phase_integral: omega, Omega, a must be > 0");
  if (sign != 1 && sign != -1)
    throw ConfigError("oscillatory_phase_integral: sign must be +1 or -1");

  // Window choice: the lower tail series needs (omega/a) e^{-a t0} small; the
  // upper tail wants a chirp frequency W >~ 10; sign = -1 has a stationary
  // phase point at a tau* = log(Omega/omega) that must stay inside the core.
  const double t0 = 2.0 / a;
  double t1 = std::max(2.0 / a, std::log(12.0 * a / omega) / a);
  if (sign < 0 && Omega > omega) {
    const double t_star = std::log(Omega / omega) / a;
    t1 = std::max(t1, t_star + 3.0 / std::sqrt(a * Omega));
  }

  std::vector<double> ladder(spec.epsilon_ladder.size());
  std::vector<std::complex<double>> values(spec.epsilon_ladder.size());
  for (std::size_t i = 0; i < spec.epsilon_ladder.size(); ++i) {
    const double eps = spec.epsilon_ladder[i] * a;
    ladder[i] = eps;
    values[i] = detail::chirp_lower_tail(omega, Omega, a, sign, eps, t0) +
                detail::chirp_core(omega, Omega, a, sign, eps, t0, t1, spec) +
                detail::chirp_upper_tail(omega, Omega, a, sign, eps, t1);
  }

  std::vector<std::complex<double>> extrapolants;
  const std::complex<double> result =
      detail::extrapolate_to_zero(ladder, values, &extrapolants);

  // Monotone Cauchy criterion on the diagonal extrapolant sequence: the last
  // correction must be small and must not grow against the previous one.
  if (extrapolants.size() >= 3) {
    const double d_last = std::abs(extrapolants[extrapolants.size() - 1] -
                                   extrapolants[extrapolants.size() - 2]);
    const double d_prev = std::abs(extrapolants[extrapolants.size() - 2] -
                                   extrapolants[extrapolants.size() - 3]);
    const double scale = std::abs(result);
    if (d_last > std::max(100.0 * spec.rel_tol * scale, spec.abs_tol) &&
        d_last > d_prev)
      throw ExtrapolationUnstable(
          "oscillatory_phase_integral: ladder extrapolants are not Cauchy");
  }
  return result;
}

} // namespace sqed
