#pragma once

#include <complex>

namespace sqed {

using Complex = std::complex<double>;

/// Principal-branch log of the Gamma function (Lanczos approximation,
/// reflection formula for Re z < 0.5).  The imaginary part is reduced to
/// (-pi, pi], so exp(log_gamma_complex(z)) == Gamma(z).
/// Throws PoleError when z is within 1e-12 of a non-positive integer.
Complex log_gamma_complex(Complex z);

/// Gamma(z) itself, via exp of the log form.
Complex gamma_complex(Complex z);

/// |Gamma(iy)|^2 for real y != 0, evaluated through log_gamma_complex.
double gamma_imag_axis_abs2(double y);

} // namespace sqed
