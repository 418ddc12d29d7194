#pragma once

// Monte Carlo characterization of point-counting error: caps of a fixed
// normalized area are dropped uniformly at random and the absolute errors
// of their estimated areas summarized as rmse and maximum.
//
// All randomness flows from counter-based streams keyed on
// (seed, cell, trial), and per-trial errors are reduced in trial order, so
// results are bit-identical for any thread count.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spharea/geometry.hpp"
#include "spharea/lattice.hpp"
#include "spharea/rng.hpp"

namespace spharea {

/// Sampling families benchmarked: the two lattices plus uniformly random
/// points redrawn for every trial.
enum class SampleFamily { LatLon, Fibonacci, Random };

std::string_view to_string(SampleFamily family) noexcept;
std::optional<SampleFamily> parse_sample_family(std::string_view name) noexcept;
SampleFamily sample_family(LatticeFamily family) noexcept;

/// `param` is k (LatLon), N (Fibonacci) or the point count P (Random).
struct LatticeSpec {
  SampleFamily family = SampleFamily::Fibonacci;
  std::int64_t param = 0;
  Chirality chirality = Chirality::Eastward;
};

std::int64_t point_count(const LatticeSpec& spec);

/// Nearest achievable configuration for a target point count (ties go to the
/// larger lattice).
LatticeSpec spec_for_points(SampleFamily family, std::int64_t target_points,
                            Chirality chirality = Chirality::Eastward);

Lattice build_lattice(const LatticeSpec& spec);

struct TrialPlan {
  LatticeSpec lattice;
  std::vector<double> cap_fractions;  // ascending, each in (0, 0.5]
  std::int64_t trials = 2000;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument if the plan breaks its invariants.
  void validate() const;
};

struct ErrorStats {
  SampleFamily family = SampleFamily::Fibonacci;
  std::int64_t points = 0;
  double effective_points = 0.0;
  double cap_fraction = 0.0;
  std::int64_t trials = 0;
  double rmse = 0.0;
  double max_error = 0.0;

  friend bool operator==(const ErrorStats&, const ErrorStats&) = default;
};

struct TrialRecord {
  GeoPoint center;
  double error = 0.0;
};

/// `count` fractions evenly spaced over (0, max_fraction]:
/// max_fraction * i / count for i = 1..count.
std::vector<double> uniform_fraction_grid(std::size_t count, double max_fraction = 0.5);

/// Per-trial centers and errors for one cell; trial j draws its center from
/// stream.trial(j).
std::vector<TrialRecord> run_cell_trials(const Lattice& lattice, double fraction,
                                         std::int64_t trials, const RngStream& stream,
                                         unsigned threads = 1);

ErrorStats run_cell(const Lattice& lattice, double fraction, std::int64_t trials,
                    const RngStream& stream, unsigned threads = 1);

/// Stream of cell `cell` (index into the plan's fractions) of a sweep.
RngStream cell_stream(std::uint64_t seed, const LatticeSpec& spec, std::size_t cell);

/// One ErrorStats per plan fraction, in plan order. Cell c draws from
/// cell_stream(seed, lattice, c).
std::vector<ErrorStats> run_sweep(const TrialPlan& plan, unsigned threads = 1);

/// Cell with the largest rmse; ties resolve to the smallest fraction.
ErrorStats rmse_max(std::span<const ErrorStats> sweep);

/// Supremum over radii r in [0, radius(max_fraction)] of
/// |estimate(cap(center, r)) - F(r)|. The estimate is a right-continuous
/// step function of r jumping at the sorted point distances, so the
/// supremum is found at each jump (just below and at it) and at the end of
/// the interval.
double exact_max_error_for_center(const Lattice& lattice, const GeoPoint& center,
                                  double max_fraction);

/// Baseline: every trial redraws `points` uniformly random unit-weight
/// sample points. Expected rmse is sqrt(F(1-F)/P).
ErrorStats random_baseline_cell(std::int64_t points, double fraction, std::int64_t trials,
                                const RngStream& stream, unsigned threads = 1);

}  // namespace spharea
