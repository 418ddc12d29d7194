#include "spharea/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spharea {

namespace {

// Half-width of the dot-product band in which CapMembership defers to the
// exact distance. Rounding in the unit vectors is a few 1e-16.
constexpr double kMembershipBand = 1e-12;

struct SinCos {
  double sin;
  double cos;
};

// sin/cos of an angle in degrees, exact at multiples of 90 so that poles,
// the equator and quarter turns produce clean zeros.
SinCos sin_cos_deg(double deg) noexcept {
  const double quarter = deg / 90.0;
  if (quarter == std::nearbyint(quarter) && std::abs(quarter) <= 8.0) {
    switch (((static_cast<int>(quarter) % 4) + 4) % 4) {
      case 0: return {0.0, 1.0};
      case 1: return {1.0, 0.0};
      case 2: return {0.0, -1.0};
      default: return {-1.0, 0.0};
    }
  }
  const double rad = deg_to_rad(deg);
  return {std::sin(rad), std::cos(rad)};
}

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

}  // namespace

double normalize_longitude(double lon_deg) {
  require_finite(lon_deg, "longitude");
  if (lon_deg >= -180.0 && lon_deg < 180.0) return lon_deg + 0.0;  // drops -0
  double r = std::fmod(lon_deg, 360.0);
  if (r < -180.0) {
    r += 360.0;
  } else if (r >= 180.0) {
    r -= 360.0;
  }
  return r;
}

GeoPoint::GeoPoint(double lat_deg, double lon_deg) {
  require_finite(lat_deg, "latitude");
  if (lat_deg < -90.0 || lat_deg > 90.0) {
    throw std::invalid_argument("latitude " + std::to_string(lat_deg) +
                                " outside [-90, 90]");
  }
  lat_ = lat_deg;
  lon_ = normalize_longitude(lon_deg);
}

GeoPoint antipode(const GeoPoint& p) {
  return GeoPoint(-p.lat(), p.lon() + 180.0);
}

UnitVector to_unit_vector(const GeoPoint& p) noexcept {
  const auto [sin_lat, cos_lat] = sin_cos_deg(p.lat());
  const auto [sin_lon, cos_lon] = sin_cos_deg(p.lon());
  return {cos_lat * cos_lon, cos_lat * sin_lon, sin_lat};
}

Cap::Cap(GeoPoint center, double angular_radius)
    : center_(center), angular_radius_(angular_radius) {
  if (!(angular_radius >= 0.0 && angular_radius <= kPi)) {
    throw std::invalid_argument("cap radius must lie in [0, pi]");
  }
}

Cap complementary_cap(const Cap& cap) {
  return Cap(antipode(cap.center()), kPi - cap.angular_radius());
}

double great_circle_distance(const GeoPoint& p_in, const GeoPoint& q_in) noexcept {
  // Fixed argument order makes the result bitwise symmetric.
  const bool swap = p_in.lat() > q_in.lat() || (p_in.lat() == q_in.lat() && p_in.lon() > q_in.lon());
  const GeoPoint& p = swap ? q_in : p_in;
  const GeoPoint& q = swap ? p_in : q_in;
  const auto [sin1, cos1] = sin_cos_deg(p.lat());
  const auto [sin2, cos2] = sin_cos_deg(q.lat());
  const auto [sin_dlon, cos_dlon] = sin_cos_deg(q.lon() - p.lon());
  const double a = cos2 * sin_dlon;
  const double b = cos1 * sin2 - sin1 * cos2 * cos_dlon;
  const double y = std::hypot(a, b);
  const double x = sin1 * sin2 + cos1 * cos2 * cos_dlon;
  return std::atan2(y, x);
}

double cap_area_fraction(double angular_radius) {
  if (!(angular_radius >= 0.0 && angular_radius <= kPi)) {
    throw std::invalid_argument("cap radius must lie in [0, pi]");
  }
  // sin^2(r/2) == (1 - cos r)/2 without the cancellation for small r.
  const double s = std::sin(0.5 * angular_radius);
  return std::min(1.0, s * s);
}

double cap_radius_from_fraction(double fraction) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("cap fraction must lie in [0, 1]");
  }
  // asin form for small caps, acos form where 1 - 2F has no cancellation
  // (and hits pi/2 exactly at F = 0.5).
  if (fraction < 0.25) return 2.0 * std::asin(std::sqrt(fraction));
  return std::acos(1.0 - 2.0 * fraction);
}

bool point_in_cap(const GeoPoint& p, const Cap& cap) {
  return great_circle_distance(p, cap.center()) <= cap.angular_radius();
}

CapMembership::CapMembership(const Cap& cap)
    : cap_(cap),
      center_(cap.center()),
      center_vec_(to_unit_vector(cap.center())),
      radius_(cap.angular_radius()) {
  const double cos_r = std::cos(radius_);
  upper_ = cos_r + kMembershipBand;
  lower_ = cos_r - kMembershipBand;
}

GeoPoint random_cap_center(double x1, double x2) {
  if (!(x1 >= 0.0 && x1 <= 1.0 && x2 >= 0.0 && x2 <= 1.0)) {
    throw std::invalid_argument("random deviates must lie in [0, 1]");
  }
  const double lat = std::clamp(rad_to_deg(std::asin(2.0 * x1 - 1.0)), -90.0, 90.0);
  return GeoPoint(lat, 360.0 * x2 - 180.0);
}

}  // namespace spharea
