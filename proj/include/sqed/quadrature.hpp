#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace sqed {

enum class TailPolicy {
  Fixed,   // integrate [0, omega_max] and stop
  Adaptive // start at omega_max, extend by doubling until the tail criterion
};

/// Tolerances and cutoff policy shared by every integral and ODE solve.
/// epsilon_ladder entries are in units of the acceleration parameter of the
/// oscillatory integrals; they must be strictly decreasing and positive.
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  int max_subdivisions = 4000;
  TailPolicy tail_policy = TailPolicy::Adaptive;
  double omega_max = 16.0;      // hard cutoff (Fixed) or initial window (Adaptive)
  double tail_fraction = 1e-3;  // last tail block must contribute < tail_fraction * rel_tol
  std::vector<double> epsilon_ladder = {0.2,    0.1,     0.05,    0.025,
                                        0.0125, 0.00625, 0.003125};

  void validate() const; // throws ConfigError on a violated invariant
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double cutoff = 0.0; // upper limit actually used
};

/// Adaptive Gauss panels over [a, b].  Deterministic: refinement order and
/// the final pairwise reduction do not depend on evaluation timing.
double integrate_finite(const std::function<double(double)>& f, double a,
                        double b, const QuadratureSpec& spec,
                        double* error_estimate = nullptr);

/// Complex-valued variant with caller-supplied initial breakpoints (used for
/// oscillatory integrands that need a phase-aware initial mesh).
std::complex<double> integrate_finite_complex(
    const std::function<std::complex<double>(double)>& f,
    std::span<const double> breakpoints, const QuadratureSpec& spec,
    double* error_estimate = nullptr);

/// Integral of f over [0, infinity) under the spec's tail policy.  The
/// Adaptive policy presumes an eventually decaying (exponential-like) tail
/// and throws DivergentTail when successive doubling blocks stop shrinking.
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec);

/// Deterministic pairwise sum; bitwise-stable result for a given ordering.
double pairwise_sum(std::span<const double> values);

} // namespace sqed
