#include "spharea/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spharea {

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
const double kPhiSquared = kPhi + 1.0;

double spiral_latitude(double t, std::int64_t n) {
  const double s = (2.0 * t) / static_cast<double>(2 * n + 1);
  return std::clamp(rad_to_deg(std::asin(s)), -90.0, 90.0);
}

// mod() keeps the sign of the dividend, so mod(-t) == -mod(t) and
// lon(-t) == -lon(t) exactly before normalization.
double spiral_longitude(double t, Chirality chirality) {
  if (chirality == Chirality::Eastward) {
    return normalize_longitude(std::fmod(t, kPhi) * 360.0 / kPhi);
  }
  return normalize_longitude(-(std::fmod(t, kPhiSquared) * 360.0 / kPhiSquared));
}

}  // namespace

std::string_view to_string(LatticeFamily family) noexcept {
  switch (family) {
    case LatticeFamily::LatLon: return "latlon";
    case LatticeFamily::Fibonacci: return "fibonacci";
  }
  return "unknown";
}

std::string_view to_string(Chirality chirality) noexcept {
  return chirality == Chirality::Eastward ? "east" : "west";
}

Lattice::Lattice(LatticeFamily family, std::int64_t param, std::vector<WeightedPoint> points)
    : family_(family), param_(param), points_(std::move(points)) {
  const std::int64_t expected = family == LatticeFamily::LatLon
                                    ? latlon_point_count(param)
                                    : fibonacci_point_count(param);
  if (static_cast<std::int64_t>(points_.size()) != expected) {
    throw std::invalid_argument(std::string(to_string(family)) + " lattice with param " +
                                std::to_string(param) + " needs " +
                                std::to_string(expected) + " points, got " +
                                std::to_string(points_.size()));
  }
  unit_vectors_.reserve(points_.size());
  for (const auto& wp : points_) {
    if (!(wp.weight >= 0.0) || !std::isfinite(wp.weight)) {
      throw std::invalid_argument("lattice weights must be finite and non-negative");
    }
    unit_vectors_.push_back(to_unit_vector(wp.point));
  }
}

std::int64_t latlon_point_count(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("latitude-longitude lattice needs k >= 1");
  if (k > 1'000'000) throw std::invalid_argument("latitude-longitude k too large");
  return 2 * k * (k - 1) + 2;
}

std::int64_t fibonacci_point_count(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("Fibonacci lattice needs N >= 0");
  if (n > std::numeric_limits<std::int32_t>::max()) {
    throw std::invalid_argument("Fibonacci N too large");
  }
  return 2 * n + 1;
}

Lattice generate_latlon(std::int64_t k) {
  const std::int64_t count = latlon_point_count(k);
  std::vector<WeightedPoint> points;
  points.reserve(static_cast<std::size_t>(count));

  std::int64_t index = 0;
  points.push_back({index++, GeoPoint(90.0, 0.0), 0.0});
  for (std::int64_t j = 1; j < k; ++j) {
    // Integer numerators keep parallels j and k-j exact mirror images.
    const double lat = static_cast<double>((k - 2 * j) * 90) / static_cast<double>(k);
    const double weight = lat == 0.0 ? 1.0 : std::cos(deg_to_rad(lat));
    for (std::int64_t m = 0; m < 2 * k; ++m) {
      const double lon = static_cast<double>((m - k) * 180) / static_cast<double>(k);
      points.push_back({index++, GeoPoint(lat, lon), weight});
    }
  }
  points.push_back({index++, GeoPoint(-90.0, 0.0), 0.0});
  return Lattice(LatticeFamily::LatLon, k, std::move(points));
}

Lattice generate_fibonacci(std::int64_t n, Chirality chirality) {
  const std::int64_t count = fibonacci_point_count(n);
  std::vector<WeightedPoint> points;
  points.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = -n; i <= n; ++i) {
    const auto t = static_cast<double>(i);
    points.push_back({i, GeoPoint(spiral_latitude(t, n), spiral_longitude(t, chirality)), 1.0});
  }
  return Lattice(LatticeFamily::Fibonacci, n, std::move(points));
}

GeoPoint spiral_point(double t, std::int64_t n, Chirality chirality) {
  fibonacci_point_count(n);
  const double half_range = static_cast<double>(n) + 0.5;
  if (!(t >= -half_range && t <= half_range)) {
    throw std::invalid_argument("spiral parameter outside [-N-1/2, N+1/2]");
  }
  return GeoPoint(spiral_latitude(t, n), spiral_longitude(t, chirality));
}

std::int64_t latlon_param_for_points(std::int64_t target_points) {
  if (target_points < 1) throw std::invalid_argument("target point count must be >= 1");
  const auto guess = static_cast<std::int64_t>(
      std::floor(0.5 + std::sqrt(std::max(0.0, (static_cast<double>(target_points) - 1.5) / 2.0))));
  std::int64_t best_k = 1;
  std::int64_t best_gap = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t k = std::max<std::int64_t>(1, guess - 2); k <= guess + 2; ++k) {
    const std::int64_t gap = std::abs(latlon_point_count(k) - target_points);
    // Ascending k: `<=` hands ties to the larger lattice.
    if (gap <= best_gap) {
      best_gap = gap;
      best_k = k;
    }
  }
  return best_k;
}

std::int64_t fibonacci_param_for_points(std::int64_t target_points) {
  if (target_points < 1) throw std::invalid_argument("target point count must be >= 1");
  return target_points / 2;
}

}  // namespace spharea
