#pragma once

// Geometry on the unit sphere. Coordinates are stored in degrees; distances
// and cap radii are angles in radians (sphere radius normalized to 1).

#include <concepts>
#include <numbers>

namespace spharea {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) noexcept { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) noexcept { return rad * (180.0 / kPi); }

/// Maps a finite longitude onto [-180, 180). Values already in range are
/// returned unchanged; +180 maps to -180. Throws std::invalid_argument on
/// non-finite input.
double normalize_longitude(double lon_deg);

/// A location on the sphere. Latitude in [-90, 90], longitude normalized to
/// [-180, 180) on construction. Pole longitudes are kept as given.
class GeoPoint {
 public:
  GeoPoint() = default;
  GeoPoint(double lat_deg, double lon_deg);

  double lat() const noexcept { return lat_; }
  double lon() const noexcept { return lon_; }

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;

 private:
  double lat_ = 0.0;
  double lon_ = 0.0;
};

GeoPoint antipode(const GeoPoint& p);

struct UnitVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

UnitVector to_unit_vector(const GeoPoint& p) noexcept;

constexpr double dot(const UnitVector& a, const UnitVector& b) noexcept {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Spherical cap: every point within `angular_radius` (radians, [0, pi]) of
/// `center`.
class Cap {
 public:
  Cap(GeoPoint center, double angular_radius);

  const GeoPoint& center() const noexcept { return center_; }
  double angular_radius() const noexcept { return angular_radius_; }

 private:
  GeoPoint center_;
  double angular_radius_;
};

/// The cap covering the rest of the sphere: antipodal center, radius pi - r.
Cap complementary_cap(const Cap& cap);

/// Central angle between two points in [0, pi]. Uses the atan2 form, which
/// stays accurate for nearly coincident and nearly antipodal pairs.
double great_circle_distance(const GeoPoint& p, const GeoPoint& q) noexcept;

/// Normalized cap area (1 - cos r) / 2.
double cap_area_fraction(double angular_radius);

/// Inverse of cap_area_fraction on [0, 1].
double cap_radius_from_fraction(double fraction);

/// Boundary counts as inside (d <= r).
bool point_in_cap(const GeoPoint& p, const Cap& cap);

/// Precomputed cap for repeated membership queries against points whose unit
/// vectors are already known. A dot-product comparison decides every point
/// clearly away from the boundary; points within a small band of it fall
/// back to great_circle_distance, so the answer always equals point_in_cap.
class CapMembership {
 public:
  explicit CapMembership(const Cap& cap);

  bool contains(const GeoPoint& p, const UnitVector& v) const noexcept {
    const double c = dot(center_vec_, v);
    if (c > upper_) return true;
    if (c < lower_) return false;
    return great_circle_distance(p, center_) <= radius_;
  }

  const Cap& cap() const noexcept { return cap_; }

 private:
  Cap cap_;
  GeoPoint center_;
  UnitVector center_vec_;
  double radius_;
  double upper_;
  double lower_;
};

/// Uniform-on-the-sphere cap center from two independent deviates in [0, 1]:
/// lat = asin(2 x1 - 1), lon = 360 x2 - 180.
GeoPoint random_cap_center(double x1, double x2);

template <class Stream>
  requires requires(Stream& s) {
    { s.uniform() } -> std::convertible_to<double>;
  }
GeoPoint random_cap_center(Stream& stream) {
  const double x1 = stream.uniform();
  const double x2 = stream.uniform();
  return random_cap_center(x1, x2);
}

}  // namespace spharea
