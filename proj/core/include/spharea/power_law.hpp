#pragma once

#include <span>

namespace spharea {

struct PowerLawSample {
  double x = 0.0;
  double y = 0.0;
};

/// y ~= coefficient * x^exponent; residual is the rms of the log residuals.
struct PowerLawFit {
  double coefficient = 0.0;
  double exponent = 0.0;
  double residual = 0.0;
};

/// Unweighted ordinary least squares on (log x, log y). Needs at least two
/// samples with positive coordinates and at least two distinct x values.
PowerLawFit fit_power_law(std::span<const PowerLawSample> samples);

}  // namespace spharea
