#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "spharea/area.hpp"
#include "spharea/power_law.hpp"

namespace spharea::cli {

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

struct ConfigMax {
  std::int64_t points;
  double effective_points;
  double rmse;
};

struct FamilyFits {
  PowerLawFit by_points;
  PowerLawFit by_effective;
};

}  // namespace

Lattice resolve_lattice(const LatticeArgs& args) {
  if (args.param.has_value() == args.points.has_value()) {
    throw UsageError("give exactly one of --param and --points");
  }
  std::int64_t param = 0;
  if (args.param) {
    param = *args.param;
  } else {
    if (*args.points < 1) throw UsageError("--points must be >= 1");
    param = spec_for_points(sample_family(args.family), *args.points).param;
  }
  try {
    return args.family == LatticeFamily::LatLon ? generate_latlon(param)
                                                : generate_fibonacci(param, args.chirality);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void cmd_gen_lattice(const LatticeArgs& args, std::ostream& out) {
  write_lattice_csv(out, resolve_lattice(args));
}

std::vector<SpiralSample> spiral_polyline(std::int64_t n, Chirality chirality,
                                          int samples_per_turn) {
  if (n < 0) throw UsageError("spiral needs N >= 0");
  if (samples_per_turn < 2) throw UsageError("--samples-per-turn must be >= 2");
  // One full turn spans phi (east) or phi^2 (west) units of t.
  const double turn = chirality == Chirality::Eastward ? kPhi : kPhi * kPhi;
  const auto half_steps = static_cast<std::int64_t>(
      std::ceil(static_cast<double>(samples_per_turn) / (2.0 * turn)));
  const std::int64_t per_unit = 2 * std::max<std::int64_t>(1, half_steps);
  const std::int64_t span = 2 * n + 1;
  const std::int64_t steps = span * per_unit;

  std::vector<SpiralSample> samples;
  samples.reserve(static_cast<std::size_t>(steps + 1));
  for (std::int64_t s = 0; s <= steps; ++s) {
    // (2s - span*per_unit) / (2*per_unit): exact whenever t is an integer.
    const double t = static_cast<double>(2 * s - span * per_unit) /
                     static_cast<double>(2 * per_unit);
    samples.push_back({t, spiral_point(t, n, chirality)});
  }
  return samples;
}

void cmd_spiral(std::int64_t n, Chirality chirality, int samples_per_turn, std::ostream& out) {
  const auto samples = spiral_polyline(n, chirality, samples_per_turn);
  write_spiral_csv(out, samples);
}

void cmd_estimate(const LatticeArgs& args, std::istream& caps_in, std::ostream& out) {
  const Lattice lattice = resolve_lattice(args);
  const std::vector<Cap> caps = read_caps_csv(caps_in);
  const AreaEstimate estimate = estimate_cap_union_area(lattice, caps);
  write_estimate_csv(out, caps.size(), lattice.size(), effective_point_count(lattice), estimate);
}

std::vector<ErrorStats> run_benchmark(const BenchmarkArgs& args) {
  if (args.families.empty()) throw UsageError("--family needs at least one family");
  if (args.point_targets.empty()) throw UsageError("--points needs at least one target");
  std::vector<ErrorStats> rows;
  for (const SampleFamily family : args.families) {
    for (const std::int64_t target : args.point_targets) {
      TrialPlan plan;
      try {
        plan.lattice = spec_for_points(family, target, args.chirality);
        plan.cap_fractions = args.fractions;
        plan.trials = args.trials;
        plan.seed = args.seed;
        plan.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto cells = run_sweep(plan, args.threads);
      rows.insert(rows.end(), cells.begin(), cells.end());
    }
  }
  return rows;
}

void cmd_benchmark(const BenchmarkArgs& args, std::ostream& out) {
  write_sweep_csv(out, run_benchmark(args));
}

std::vector<FitRow> fit_sweep(std::span<const ErrorStats> sweep) {
  // family -> P -> cells, families in order of first appearance.
  std::vector<SampleFamily> order;
  std::map<SampleFamily, std::map<std::int64_t, std::vector<ErrorStats>>> groups;
  for (const auto& row : sweep) {
    if (!groups.contains(row.family)) order.push_back(row.family);
    groups[row.family][row.points].push_back(row);
  }
  if (order.empty()) throw InputError(0, "sweep has no rows");

  std::vector<FitRow> out;
  std::map<SampleFamily, FamilyFits> fits;
  for (const SampleFamily family : order) {
    const auto& configs = groups[family];
    if (configs.size() < 2) {
      throw InputError(0, "family " + std::string(to_string(family)) +
                              " needs at least two configurations to fit");
    }
    std::vector<PowerLawSample> by_points;
    std::vector<PowerLawSample> by_effective;
    for (const auto& [points, cells] : configs) {
      const ErrorStats peak = rmse_max(cells);
      if (!(peak.rmse > 0.0)) {
        throw InputError(0, "family " + std::string(to_string(family)) + " P=" +
                                std::to_string(points) + " has zero rmse_max; cannot fit");
      }
      by_points.push_back({static_cast<double>(points), peak.rmse});
      by_effective.push_back({peak.effective_points, peak.rmse});
    }
    const FamilyFits f{fit_power_law(by_points), fit_power_law(by_effective)};
    fits[family] = f;
    const std::string name(to_string(family));
    out.push_back({name, "P", f.by_points.coefficient, f.by_points.exponent, f.by_points.residual});
    out.push_back({name, "effective_P", f.by_effective.coefficient, f.by_effective.exponent,
                   f.by_effective.residual});
  }

  if (fits.contains(SampleFamily::LatLon) && fits.contains(SampleFamily::Fibonacci)) {
    const auto& ll = fits[SampleFamily::LatLon];
    const auto& fib = fits[SampleFamily::Fibonacci];
    out.push_back({"latlon/fibonacci", "P", ll.by_points.coefficient / fib.by_points.coefficient,
                   ll.by_points.exponent - fib.by_points.exponent, 0.0});
    out.push_back({"latlon/fibonacci", "effective_P",
                   ll.by_effective.coefficient / fib.by_effective.coefficient,
                   ll.by_effective.exponent - fib.by_effective.exponent, 0.0});
  }
  return out;
}

void cmd_fit(std::istream& sweep_in, std::ostream& out) {
  const auto sweep = read_sweep_csv(sweep_in);
  const auto rows = fit_sweep(sweep);
  write_fit_csv(out, rows);
}

std::vector<double> parse_fractions(const std::string& text) {
  if (text.rfind("grid:", 0) == 0) {
    const std::string count_text = text.substr(5);
    std::size_t used = 0;
    long count = 0;
    try {
      count = std::stol(count_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != count_text.size() || count < 1) {
      throw UsageError("--fractions grid:<count> needs a positive count");
    }
    return uniform_fraction_grid(static_cast<std::size_t>(count));
  }
  std::vector<double> fractions;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      fractions.push_back(parse_double(item, 0));
    } catch (const InputError&) {
      throw UsageError("--fractions: '" + item + "' is not a number");
    }
  }
  if (fractions.empty()) throw UsageError("--fractions is empty");
  return fractions;
}

namespace {

Chirality parse_chirality(const std::string& text) {
  if (text == "east" || text == "eastward") return Chirality::Eastward;
  if (text == "west" || text == "westward") return Chirality::Westward;
  throw UsageError("--chirality must be east or west");
}

LatticeFamily parse_lattice_family(const std::string& text) {
  if (text == "latlon") return LatticeFamily::LatLon;
  if (text == "fibonacci") return LatticeFamily::Fibonacci;
  throw UsageError("--family must be latlon or fibonacci");
}

// Writes through a file when a path is given, stdout for "-". Output is
// produced into memory first so a failed command leaves no partial file.
template <class Producer>
void emit(const std::string& path, Producer&& produce) {
  std::ostringstream buffer;
  produce(static_cast<std::ostream&>(buffer));
  if (path == "-") {
    std::cout << buffer.str() << std::flush;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError(0, "cannot open '" + path + "' for writing");
  file << buffer.str();
  file.flush();
  if (!file) throw InputError(0, "failed writing '" + path + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError(0, "cannot open '" + path + "'");
  return file;
}

struct LatticeFlags {
  std::string family;
  std::optional<std::int64_t> param;
  std::optional<std::int64_t> points;
  std::string chirality = "east";

  void attach(CLI::App& cmd) {
    cmd.add_option("--family", family, "Lattice family: latlon or fibonacci")->required();
    auto* p = cmd.add_option("--param", param, "k (latlon) or N (fibonacci)");
    auto* n = cmd.add_option("--points", points, "Target point count; nearest achievable is used");
    p->excludes(n);
    cmd.add_option("--chirality", chirality, "Fibonacci spiral direction: east or west");
  }

  LatticeArgs resolve() const {
    return {parse_lattice_family(family), param, points, parse_chirality(chirality)};
  }
};

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Point lattices on the sphere and point-counting area estimation"};
  app.require_subcommand(1);

  LatticeFlags gen_flags;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("gen-lattice", "Write a lattice as CSV");
  gen_flags.attach(*gen);
  gen->add_option("--out", gen_out, "Output path ('-' for stdout)");

  std::int64_t spiral_n = 0;
  std::string spiral_chirality = "east";
  int samples_per_turn = 64;
  std::string spiral_out = "-";
  auto* spiral = app.add_subcommand("spiral", "Trace a generative spiral of the Fibonacci lattice");
  spiral->add_option("--param", spiral_n, "N of the Fibonacci lattice")->required();
  spiral->add_option("--chirality", spiral_chirality, "east or west");
  spiral->add_option("--samples-per-turn", samples_per_turn, "Polyline vertices per turn");
  spiral->add_option("--out", spiral_out, "Output path ('-' for stdout)");

  LatticeFlags est_flags;
  std::string caps_path;
  std::string est_out = "-";
  auto* estimate = app.add_subcommand("estimate", "Estimate the area of a union of caps");
  est_flags.attach(*estimate);
  estimate->add_option("--caps", caps_path, "CSV of lat_deg,lon_deg,radius_rad")->required();
  estimate->add_option("--out", est_out, "Output path ('-' for stdout)");

  std::vector<std::string> bench_families{"latlon", "fibonacci"};
  std::vector<std::int64_t> bench_points{101, 317, 1001, 3163, 10001};
  std::string bench_fractions = "grid:40";
  std::int64_t bench_trials = 2000;
  std::uint64_t bench_seed = 0;
  unsigned bench_threads = 0;
  std::string bench_chirality = "east";
  std::string bench_out = "-";
  auto* bench = app.add_subcommand("benchmark", "Monte Carlo rmse / max-error sweep");
  bench->add_option("--family", bench_families, "latlon, fibonacci and/or random")->delimiter(',');
  bench->add_option("--points", bench_points, "Target point counts")->delimiter(',');
  bench->add_option("--fractions", bench_fractions, "grid:<count> or a comma-separated list");
  bench->add_option("--trials", bench_trials, "Caps per fraction");
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--threads", bench_threads, "Worker threads (0: all cores)");
  bench->add_option("--chirality", bench_chirality, "Fibonacci spiral direction");
  bench->add_option("--out", bench_out, "Output path ('-' for stdout)");

  std::string fit_in;
  std::string fit_out = "-";
  auto* fit = app.add_subcommand("fit", "Fit rmse_max power laws to a benchmark sweep");
  fit->add_option("sweep", fit_in, "Sweep CSV written by `benchmark`")->required();
  fit->add_option("--out", fit_out, "Output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      const LatticeArgs args = gen_flags.resolve();
      emit(gen_out, [&](std::ostream& out) { cmd_gen_lattice(args, out); });
    } else if (*spiral) {
      const Chirality chirality = parse_chirality(spiral_chirality);
      emit(spiral_out, [&](std::ostream& out) {
        cmd_spiral(spiral_n, chirality, samples_per_turn, out);
      });
    } else if (*estimate) {
      const LatticeArgs args = est_flags.resolve();
      auto caps = open_input(caps_path);
      emit(est_out, [&](std::ostream& out) { cmd_estimate(args, caps, out); });
    } else if (*bench) {
      BenchmarkArgs args;
      args.families.clear();
      for (const auto& name : bench_families) {
        const auto family = parse_sample_family(name);
        if (!family) throw UsageError("unknown family '" + name + "'");
        args.families.push_back(*family);
      }
      args.point_targets = bench_points;
      args.fractions = parse_fractions(bench_fractions);
      args.trials = bench_trials;
      args.seed = bench_seed;
      args.threads = bench_threads;
      args.chirality = parse_chirality(bench_chirality);
      emit(bench_out, [&](std::ostream& out) { cmd_benchmark(args, out); });
    } else if (*fit) {
      auto sweep = open_input(fit_in);
      emit(fit_out, [&](std::ostream& out) { cmd_fit(sweep, out); });
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace spharea::cli
