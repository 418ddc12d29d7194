#pragma once

// Subcommands of the `spharea` tool. Each command writes CSV to a stream so
// it can be driven from tests without touching the filesystem; `run` adds
// argument parsing, file handling and exit codes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "spharea/csv_io.hpp"
#include "spharea/error_bench.hpp"
#include "spharea/lattice.hpp"

namespace spharea::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitInputData = 3 };

/// Bad or inconsistent command-line arguments (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lattice selection: exactly one of `param` (k or N) and `points` (target
/// P, rounded to the nearest achievable size).
struct LatticeArgs {
  LatticeFamily family = LatticeFamily::Fibonacci;
  std::optional<std::int64_t> param;
  std::optional<std::int64_t> points;
  Chirality chirality = Chirality::Eastward;
};

Lattice resolve_lattice(const LatticeArgs& args);

void cmd_gen_lattice(const LatticeArgs& args, std::ostream& out);

/// Samples t over [-N-1/2, N+1/2] on an even number of steps per unit of t,
/// so every integer t (every lattice point) is a vertex of the polyline.
std::vector<SpiralSample> spiral_polyline(std::int64_t n, Chirality chirality,
                                          int samples_per_turn);
void cmd_spiral(std::int64_t n, Chirality chirality, int samples_per_turn, std::ostream& out);

void cmd_estimate(const LatticeArgs& args, std::istream& caps, std::ostream& out);

struct BenchmarkArgs {
  std::vector<SampleFamily> families{SampleFamily::LatLon, SampleFamily::Fibonacci};
  std::vector<std::int64_t> point_targets{101, 317, 1001, 3163, 10001};
  std::vector<double> fractions = uniform_fraction_grid(40);
  std::int64_t trials = 2000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  Chirality chirality = Chirality::Eastward;
};

/// Rows ordered by family, then target, then fraction. Identical bytes for
/// a given seed whatever the thread count.
std::vector<ErrorStats> run_benchmark(const BenchmarkArgs& args);
void cmd_benchmark(const BenchmarkArgs& args, std::ostream& out);

/// Per family: rmse_max of every configuration, fitted against P and
/// against effective P; then latlon/fibonacci coefficient ratios when both
/// families are present.
std::vector<FitRow> fit_sweep(std::span<const ErrorStats> sweep);
void cmd_fit(std::istream& sweep, std::ostream& out);

/// Parses `--fractions`: either `grid:<count>` or a comma-separated list.
std::vector<double> parse_fractions(const std::string& text);

int run(int argc, char** argv);

}  // namespace spharea::cli
