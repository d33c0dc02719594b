#pragma once

#include <stdexcept>
#include <string>

namespace sqed {

// Base class for all numerical and configuration failures raised by the
// library.  name() is stable and machine-readable; the CLI prints it on
// stderr and maps it to an exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept { return "Error"; }
};

#define SQED_ERROR_CLASS(cls)                                                  \
  class cls : public Error {                                                   \
  public:                                                                      \
    using Error::Error;                                                        \
    const char* name() const noexcept override { return #cls; }                \
  }

SQED_ERROR_CLASS(PoleError);             // Gamma evaluated at a non-positive integer
SQED_ERROR_CLASS(NonConvergence);        // quadrature subdivision budget exhausted
SQED_ERROR_CLASS(DivergentTail);         // semi-infinite tail fails to shrink
SQED_ERROR_CLASS(ExtrapolationUnstable); // epsilon-ladder extrapolants not Cauchy
SQED_ERROR_CLASS(StepUnderflow);         // ODE step collapsed
SQED_ERROR_CLASS(GridTooCoarse);         // mode spacing does not resolve the resonance
SQED_ERROR_CLASS(DerivativeUnavailable); // occupation has no usable derivative
SQED_ERROR_CLASS(CutoffRequired);        // divergent form called without a fixed cutoff
SQED_ERROR_CLASS(NotConverged);          // transient did not settle within the step budget
SQED_ERROR_CLASS(ConfigError);           // invalid run configuration or input table
SQED_ERROR_CLASS(IoError);               // file could not be read or written

#undef SQED_ERROR_CLASS

} // namespace sqed
