#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "spharea/geometry.hpp"

namespace spharea {

enum class LatticeFamily { LatLon, Fibonacci };

/// Direction in which the generative spiral advances with increasing index.
/// Eastward turns by 360/phi per step, Westward by -360/phi^2.
enum class Chirality { Eastward, Westward };

std::string_view to_string(LatticeFamily family) noexcept;
std::string_view to_string(Chirality chirality) noexcept;

struct WeightedPoint {
  std::int64_t index = 0;
  GeoPoint point;
  double weight = 0.0;
};

/// An immutable, ordered set of weighted sample points. `param` is k for the
/// latitude-longitude family and N for the Fibonacci family. Unit vectors are
/// cached at construction for fast membership tests.
class Lattice {
 public:
  /// Validates the point count against the family formula and that every
  /// weight is finite and non-negative.
  Lattice(LatticeFamily family, std::int64_t param, std::vector<WeightedPoint> points);

  LatticeFamily family() const noexcept { return family_; }
  std::int64_t param() const noexcept { return param_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::span<const WeightedPoint> points() const noexcept { return points_; }
  std::span<const UnitVector> unit_vectors() const noexcept { return unit_vectors_; }

 private:
  LatticeFamily family_;
  std::int64_t param_;
  std::vector<WeightedPoint> points_;
  std::vector<UnitVector> unit_vectors_;
};

/// P = 2k(k-1) + 2 for k >= 1.
std::int64_t latlon_point_count(std::int64_t k);

/// P = 2N + 1 for N >= 0.
std::int64_t fibonacci_point_count(std::int64_t n);

/// 2k meridians from -180 in steps of 180/k, k-1 parallels, plus both poles
/// (longitude 0, weight 0). Ordered north to south, west to east. Weights
/// are cos(lat).
Lattice generate_latlon(std::int64_t k);

/// 2N+1 points, index i = -N..N, lat_i = asin(2i/(2N+1)), unit weights.
Lattice generate_fibonacci(std::int64_t n, Chirality chirality = Chirality::Eastward);

/// Generative spiral of the Fibonacci lattice with a continuous index
/// t in [-N-1/2, N+1/2]. Integer t gives exactly the lattice point of that
/// index; the ends of the range reach the poles.
GeoPoint spiral_point(double t, std::int64_t n, Chirality chirality);

/// k whose lattice size 2k(k-1)+2 is nearest to `target_points`; ties go
/// to the larger lattice.
std::int64_t latlon_param_for_points(std::int64_t target_points);

/// N such that 2N+1 is the odd count nearest to `target_points`; ties go to
/// the larger lattice.
std::int64_t fibonacci_param_for_points(std::int64_t target_points);

}  // namespace spharea
