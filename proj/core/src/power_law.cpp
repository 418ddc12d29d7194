#include "spharea/power_law.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spharea {

namespace {

struct LogSample {
  double u;
  double v;
};

std::vector<LogSample> to_log(std::span<const PowerLawSample> samples) {
  if (samples.size() < 2) throw std::invalid_argument("power-law fit needs at least 2 samples");
  std::vector<LogSample> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    if (!(s.x > 0.0 && s.y > 0.0) || !std::isfinite(s.x) || !std::isfinite(s.y)) {
      throw std::invalid_argument("power-law fit needs finite positive samples");
    }
    out.push_back({std::log(s.x), std::log(s.y)});
  }
  return out;
}

double rms_residual(const std::vector<LogSample>& logs, double intercept, double slope) {
  double sum_sq = 0.0;
  for (const auto& s : logs) {
    const double r = s.v - (intercept + slope * s.u);
    sum_sq += r * r;
  }
  return std::sqrt(sum_sq / static_cast<double>(logs.size()));
}

}  // namespace

PowerLawFit fit_power_law(std::span<const PowerLawSample> samples) {
  const auto logs = to_log(samples);
  const auto n = static_cast<double>(logs.size());
  double mean_u = 0.0;
  double mean_v = 0.0;
  for (const auto& s : logs) {
    mean_u += s.u;
    mean_v += s.v;
  }
  mean_u /= n;
  mean_v /= n;
  double suu = 0.0;
  double suv = 0.0;
  for (const auto& s : logs) {
    suu += (s.u - mean_u) * (s.u - mean_u);
    suv += (s.u - mean_u) * (s.v - mean_v);
  }
  if (!(suu > 0.0)) throw std::invalid_argument("power-law fit needs distinct x values");
  const double slope = suv / suu;
  const double intercept = mean_v - slope * mean_u;
  return {std::exp(intercept), slope, rms_residual(logs, intercept, slope)};
}

}  // namespace spharea
