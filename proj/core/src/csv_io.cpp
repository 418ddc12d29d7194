#include "spharea/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <system_error>

namespace spharea {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view field, std::size_t line) {
  field = trim(field);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw InputError(line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

// Yields (line number, trimmed line) for every non-blank line.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string_view& line) {
    while (std::getline(in_, buffer_)) {
      ++number_;
      line = trim(buffer_);
      if (!line.empty()) return true;
    }
    return false;
  }

  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t number_ = 0;
};

void expect_header(LineReader& reader, std::string_view header) {
  std::string_view line;
  if (!reader.next(line)) throw InputError(0, "missing header '" + std::string(header) + "'");
  if (line != header) {
    throw InputError(reader.number(), "expected header '" + std::string(header) + "'");
  }
}

std::vector<std::string_view> expect_fields(std::string_view line, std::size_t count,
                                            std::size_t number) {
  auto fields = split_fields(line);
  if (fields.size() != count) {
    throw InputError(number, "expected " + std::to_string(count) + " fields, got " +
                                 std::to_string(fields.size()));
  }
  return fields;
}

}  // namespace

InputError::InputError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string format_shortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

double parse_double(std::string_view field, std::size_t line) {
  field = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty() ||
      !std::isfinite(value)) {
    throw InputError(line, "expected a number, got '" + std::string(field) + "'");
  }
  return value;
}

void write_lattice_csv(std::ostream& out, const Lattice& lattice) {
  out << kLatticeHeader << '\n';
  for (const auto& wp : lattice.points()) {
    out << wp.index << ',' << format_fixed(wp.point.lat(), 12) << ','
        << format_fixed(wp.point.lon(), 12) << ',' << format_fixed(wp.weight, 12) << '\n';
  }
}

Lattice read_lattice_csv(std::istream& in) {
  LineReader reader(in);
  expect_header(reader, kLatticeHeader);
  std::vector<WeightedPoint> points;
  std::string_view line;
  while (reader.next(line)) {
    const auto f = expect_fields(line, 4, reader.number());
    try {
      points.push_back({parse_int(f[0], reader.number()),
                        GeoPoint(parse_double(f[1], reader.number()),
                                 parse_double(f[2], reader.number())),
                        parse_double(f[3], reader.number())});
    } catch (const std::invalid_argument& e) {
      throw InputError(reader.number(), e.what());
    }
    if (points.back().weight < 0.0) throw InputError(reader.number(), "negative weight");
  }
  if (points.empty()) throw InputError(0, "lattice file has no points");

  const auto count = static_cast<std::int64_t>(points.size());
  LatticeFamily family;
  std::int64_t param;
  std::int64_t first_index;
  if (count % 2 == 1) {
    family = LatticeFamily::Fibonacci;
    param = (count - 1) / 2;
    first_index = -param;
  } else {
    family = LatticeFamily::LatLon;
    param = latlon_param_for_points(count);
    if (latlon_point_count(param) != count) {
      throw InputError(0, std::to_string(count) + " points is not a latitude-longitude lattice size");
    }
    first_index = 0;
  }
  for (std::int64_t i = 0; i < count; ++i) {
    if (points[static_cast<std::size_t>(i)].index != first_index + i) {
      throw InputError(0, "lattice indices must run consecutively from " +
                              std::to_string(first_index));
    }
  }
  return Lattice(family, param, std::move(points));
}

std::vector<Cap> read_caps_csv(std::istream& in) {
  LineReader reader(in);
  std::vector<Cap> caps;
  std::string_view line;
  bool first = true;
  while (reader.next(line)) {
    if (first && line == kCapsHeader) {
      first = false;
      continue;
    }
    first = false;
    const auto f = expect_fields(line, 3, reader.number());
    const double lat = parse_double(f[0], reader.number());
    const double lon = parse_double(f[1], reader.number());
    const double radius = parse_double(f[2], reader.number());
    try {
      caps.emplace_back(GeoPoint(lat, lon), radius);
    } catch (const std::invalid_argument& e) {
      throw InputError(reader.number(), e.what());
    }
  }
  return caps;
}

void write_spiral_csv(std::ostream& out, std::span<const SpiralSample> samples) {
  out << kSpiralHeader << '\n';
  for (const auto& s : samples) {
    out << format_shortest(s.t) << ',' << format_fixed(s.point.lat(), 12) << ','
        << format_fixed(s.point.lon(), 12) << '\n';
  }
}

void write_estimate_csv(std::ostream& out, std::size_t cap_count, std::size_t points,
                        double effective_points, const AreaEstimate& estimate) {
  out << kEstimateHeader << '\n'
      << cap_count << ',' << points << ',' << format_shortest(effective_points) << ','
      << format_shortest(estimate.fraction) << ',' << estimate.points_inside << '\n';
}

void write_sweep_csv(std::ostream& out, std::span<const ErrorStats> rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.family) << ',' << r.points << ',' << format_shortest(r.effective_points)
        << ',' << format_shortest(r.cap_fraction) << ',' << r.trials << ','
        << format_shortest(r.rmse) << ',' << format_shortest(r.max_error) << '\n';
  }
}

std::vector<ErrorStats> read_sweep_csv(std::istream& in) {
  LineReader reader(in);
  expect_header(reader, kSweepHeader);
  std::vector<ErrorStats> rows;
  std::string_view line;
  while (reader.next(line)) {
    const std::size_t n = reader.number();
    const auto f = expect_fields(line, 7, n);
    const auto family = parse_sample_family(trim(f[0]));
    if (!family) throw InputError(n, "unknown family '" + std::string(trim(f[0])) + "'");
    ErrorStats row;
    row.family = *family;
    row.points = parse_int(f[1], n);
    row.effective_points = parse_double(f[2], n);
    row.cap_fraction = parse_double(f[3], n);
    row.trials = parse_int(f[4], n);
    row.rmse = parse_double(f[5], n);
    row.max_error = parse_double(f[6], n);
    if (row.points < 1 || row.trials < 1 || row.rmse < 0.0 || row.max_error < 0.0) {
      throw InputError(n, "sweep row out of range");
    }
    rows.push_back(row);
  }
  return rows;
}

void write_fit_csv(std::ostream& out, std::span<const FitRow> rows) {
  out << kFitHeader << '\n';
  for (const auto& r : rows) {
    out << r.family << ',' << r.x_variable << ',' << format_shortest(r.k) << ','
        << format_shortest(r.a) << ',' << format_shortest(r.residual) << '\n';
  }
}

std::vector<FitRow> read_fit_csv(std::istream& in) {
  LineReader reader(in);
  expect_header(reader, kFitHeader);
  std::vector<FitRow> rows;
  std::string_view line;
  while (reader.next(line)) {
    const std::size_t n = reader.number();
    const auto f = expect_fields(line, 5, n);
    rows.push_back({std::string(trim(f[0])), std::string(trim(f[1])), parse_double(f[2], n),
                    parse_double(f[3], n), parse_double(f[4], n)});
  }
  return rows;
}

}  // namespace spharea
