#pragma once

// CSV readers and writers for lattices, cap lists, spirals, estimates,
// benchmark sweeps and power-law fits. Output is locale independent: '.'
// decimal separator, LF line endings, header row first.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spharea/area.hpp"
#include "spharea/error_bench.hpp"
#include "spharea/geometry.hpp"
#include "spharea/lattice.hpp"

namespace spharea {

/// Malformed input data. `line()` is the 1-based line of the offending row,
/// or 0 when the problem is not tied to one row.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);
/// Shortest representation that parses back to the same double.
std::string format_shortest(double value);
/// Strict parse of a complete field as a finite double.
double parse_double(std::string_view field, std::size_t line);

inline constexpr std::string_view kLatticeHeader = "index,lat_deg,lon_deg,weight";
inline constexpr std::string_view kCapsHeader = "lat_deg,lon_deg,radius_rad";
inline constexpr std::string_view kSpiralHeader = "t,lat_deg,lon_deg";
inline constexpr std::string_view kEstimateHeader = "n_caps,P,effective_P,fraction,points_inside";
inline constexpr std::string_view kSweepHeader = "family,P,effective_P,cap_fraction,n,rmse,max_error";
inline constexpr std::string_view kFitHeader = "family,x_variable,k,a,residual";

/// One row per point in lattice order; coordinates and weights with 12
/// decimals.
void write_lattice_csv(std::ostream& out, const Lattice& lattice);

/// Reads a lattice written by write_lattice_csv. The family is inferred from
/// the indices: -N..N for Fibonacci, 0..P-1 with P = 2k(k-1)+2 for LatLon.
Lattice read_lattice_csv(std::istream& in);

/// Rows `lat_deg,lon_deg,radius_rad`; the header row is optional and blank
/// lines are ignored.
std::vector<Cap> read_caps_csv(std::istream& in);

struct SpiralSample {
  double t = 0.0;
  GeoPoint point;
};

void write_spiral_csv(std::ostream& out, std::span<const SpiralSample> samples);

void write_estimate_csv(std::ostream& out, std::size_t cap_count, std::size_t points,
                        double effective_points, const AreaEstimate& estimate);

void write_sweep_csv(std::ostream& out, std::span<const ErrorStats> rows);
std::vector<ErrorStats> read_sweep_csv(std::istream& in);

struct FitRow {
  std::string family;
  std::string x_variable;
  double k = 0.0;
  double a = 0.0;
  double residual = 0.0;
};

void write_fit_csv(std::ostream& out, std::span<const FitRow> rows);
std::vector<FitRow> read_fit_csv(std::istream& in);

}  // namespace spharea
