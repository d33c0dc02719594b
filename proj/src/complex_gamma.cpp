#include "sqed/complex_gamma.hpp"

#include <cmath>
#include <numbers>

#include "sqed/errors.hpp"

namespace sqed {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos g = 7, 9-term coefficient set.
constexpr int lanczos_g = 7;
constexpr double lanczos_p[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log Gamma for Re z >= 0.5, no branch reduction.
Complex log_gamma_right_half(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex series = lanczos_p[0];
  for (int i = 1; i < lanczos_g + 2; ++i)
    series += lanczos_p[i] / (zm1 + static_cast<double>(i));
  const Complex t = zm1 + (lanczos_g + 0.5);
  return 0.5 * std::log(2.0 * pi) + (zm1 + 0.5) * std::log(t) - t +
         std::log(series);
}

Complex reduce_imag_to_principal(Complex w) {
  double im = std::remainder(w.imag(), 2.0 * pi);
  if (im <= -pi) im += 2.0 * pi;
  return {w.real(), im};
}

} // namespace

Complex log_gamma_complex(Complex z) {
  if (std::abs(z.imag()) < 1e-12) {
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z.real() - nearest) < 1e-12)
      throw PoleError("log_gamma_complex: argument at a non-positive integer");
  }

  Complex w;
  if (z.real() >= 0.5) {
    w = log_gamma_right_half(z);
  } else {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    w = std::log(pi) - std::log(std::sin(pi * z)) -
        log_gamma_right_half(1.0 - z);
  }
  return reduce_imag_to_principal(w);
}

Complex gamma_complex(Complex z) { return std::exp(log_gamma_complex(z)); }

double gamma_imag_axis_abs2(double y) {
  return std::exp(2.0 * log_gamma_complex(Complex(0.0, y)).real());
}

} // namespace sqed
