#pragma once

// Test-only reference computations. These deliberately avoid the library's
// distance, membership and summation code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "spharea/geometry.hpp"
#include "spharea/lattice.hpp"

namespace oracle {

struct Vec3 {
  long double x, y, z;
};

inline Vec3 unit(double lat_deg, double lon_deg) {
  const long double k = std::numbers::pi_v<long double> / 180.0L;
  const long double lat = lat_deg * k;
  const long double lon = lon_deg * k;
  return {std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
}

inline Vec3 unit(const spharea::GeoPoint& p) { return unit(p.lat(), p.lon()); }

/// Central angle via arccos of the dot product (long double).
inline double arccos_distance(const spharea::GeoPoint& p, const spharea::GeoPoint& q) {
  const Vec3 a = unit(p);
  const Vec3 b = unit(q);
  const long double d = std::clamp(a.x * b.x + a.y * b.y + a.z * b.z, -1.0L, 1.0L);
  return static_cast<double>(std::acos(d));
}

/// Central angle via the chord length (long double); accurate away from pi.
inline double chord_distance(const spharea::GeoPoint& p, const spharea::GeoPoint& q) {
  const Vec3 a = unit(p);
  const Vec3 b = unit(q);
  const long double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  const long double chord = std::sqrt(dx * dx + dy * dy + dz * dz);
  return static_cast<double>(2.0L * std::asin(std::min(1.0L, chord / 2.0L)));
}

struct BruteEstimate {
  double fraction;
  std::int64_t inside;
  double min_boundary_gap;  // min |d - r| over all points
};

/// Plain loop over the lattice with the arccos distance and naive sums.
inline BruteEstimate brute_force_cap(const spharea::Lattice& lattice, const spharea::GeoPoint& c,
                                     double radius) {
  long double inside_w = 0.0L, total_w = 0.0L;
  std::int64_t inside = 0;
  double gap = INFINITY;
  for (const auto& wp : lattice.points()) {
    const double d = arccos_distance(wp.point, c);
    gap = std::min(gap, std::abs(d - radius));
    total_w += wp.weight;
    if (d <= radius) {
      inside_w += wp.weight;
      ++inside;
    }
  }
  return {static_cast<double>(inside_w / total_w), inside, gap};
}

/// Sum of cos(lat) over a latitude-longitude lattice in closed form:
/// 2k * sum_{j=1}^{k-1} sin(j pi / k) = 2k cot(pi / (2k)).
inline double latlon_weight_sum(std::int64_t k) {
  if (k == 1) return 0.0;
  const double kk = static_cast<double>(k);
  return 2.0 * kk / std::tan(std::numbers::pi / (2.0 * kk));
}

/// Uniform random point, independent of the library's center sampler.
inline spharea::GeoPoint random_point(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> lon(-180.0, 180.0);
  const double lat = std::asin(u(gen)) * 180.0 / std::numbers::pi;
  return spharea::GeoPoint(std::clamp(lat, -90.0, 90.0), lon(gen));
}

/// Distance between two longitudes modulo 360, in degrees.
inline double lon_gap(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 360.0);
  return std::min(d, 360.0 - d);
}

}  // namespace oracle
