#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "spharea/csv_io.hpp"

using namespace spharea;

namespace {

std::string lattice_text(const Lattice& lattice) {
  std::ostringstream out;
  write_lattice_csv(out, lattice);
  return out.str();
}

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_caps_csv(in);
  } catch (const InputError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_fixed(0.0, 12) == "0.000000000000");
  CHECK(format_fixed(-105.0465843002271, 12) == "-105.046584300227");
  CHECK(format_shortest(0.1) == "0.1");
  CHECK(format_shortest(1.0 / 3.0) == "0.3333333333333333");
  CHECK(parse_double(" 2.5 ", 1) == 2.5);
  CHECK_THROWS_AS(parse_double("2.5x", 4), InputError);
  CHECK_THROWS_AS(parse_double("", 4), InputError);
  CHECK_THROWS_AS(parse_double("nan", 4), InputError);
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> any(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double v = any(gen);
    REQUIRE(parse_double(format_shortest(v), 1) == v);
  }
}

TEST_CASE("lattice csv rows") {
  const std::string text = lattice_text(generate_fibonacci(10));
  CHECK(text.rfind("index,lat_deg,lon_deg,weight\n", 0) == 0);
  CHECK(text.find("\n6,34.849904579046,-105.046584300227,1.000000000000\n") != std::string::npos);
  CHECK(text.find("\n0,0.000000000000,0.000000000000,1.000000000000\n") != std::string::npos);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.back() == '\n');

  const std::string ll = lattice_text(generate_latlon(2));
  CHECK(ll ==
        "index,lat_deg,lon_deg,weight\n"
        "0,90.000000000000,0.000000000000,0.000000000000\n"
        "1,0.000000000000,-180.000000000000,1.000000000000\n"
        "2,0.000000000000,-90.000000000000,1.000000000000\n"
        "3,0.000000000000,0.000000000000,1.000000000000\n"
        "4,0.000000000000,90.000000000000,1.000000000000\n"
        "5,-90.000000000000,0.000000000000,0.000000000000\n");
}

TEST_CASE("lattice csv round trip") {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> radius(0.0, kPi);
  for (const Lattice& original : {generate_fibonacci(300, Chirality::Westward), generate_latlon(17)}) {
    const std::string text = lattice_text(original);
    std::istringstream in(text);
    const Lattice copy = read_lattice_csv(in);
    REQUIRE(copy.size() == original.size());
    CHECK(copy.family() == original.family());
    CHECK(copy.param() == original.param());
    CHECK(lattice_text(copy) == text);
    const bool unit_weights = original.family() == LatticeFamily::Fibonacci;
    for (int trial = 0; trial < 500; ++trial) {
      const Cap cap(oracle::random_point(gen), radius(gen));
      if (oracle::brute_force_cap(original, cap.center(), cap.angular_radius()).min_boundary_gap < 1e-9) {
        continue;
      }
      const auto a = estimate_area(original, cap);
      const auto b = estimate_area(copy, cap);
      REQUIRE(a.points_inside == b.points_inside);
      if (unit_weights) {
        REQUIRE(a.fraction == b.fraction);
      } else {
        REQUIRE(std::abs(a.fraction - b.fraction) < 1e-12);
      }
    }
  }
}

TEST_CASE("lattice csv rejects malformed input") {
  const auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_lattice_csv(in);
  };
  CHECK_THROWS_AS(read(""), InputError);
  CHECK_THROWS_AS(read("index,lat_deg,lon_deg,weight\n"), InputError);
  CHECK_THROWS_AS(read("index,lat_deg,lon_deg,weight\n1,0,0,1\n"), InputError);
  CHECK_THROWS_AS(read("index,lat_deg,lon_deg,weight\n0,0,0,1\n1,0,0,1\n2,0,0,1\n3,0,0,1\n"), InputError);
  CHECK_THROWS_AS(read("index,lat_deg,lon_deg,weight\n0,95,0,1\n"), InputError);
  CHECK(read("index,lat_deg,lon_deg,weight\n0,0,0,1\n").size() == 1);
}

TEST_CASE("caps csv") {
  std::istringstream with_header("lat_deg,lon_deg,radius_rad\n10,20,0.5\n\n-5.5,190,3.14159\n");
  const auto caps = read_caps_csv(with_header);
  REQUIRE(caps.size() == 2);
  CHECK(caps[0].center() == GeoPoint(10.0, 20.0));
  CHECK(caps[0].angular_radius() == 0.5);
  CHECK(caps[1].center().lon() == doctest::Approx(-170.0));

  std::istringstream bare("1,2,0.1\r\n3,4,0.2\r\n");
  CHECK(read_caps_csv(bare).size() == 2);

  std::istringstream empty("lat_deg,lon_deg,radius_rad\n");
  CHECK(read_caps_csv(empty).empty());

  CHECK(error_line("lat_deg,lon_deg,radius_rad\n1,2,0.1\n1,2\n") == 3);
  CHECK(error_line("1,2,0.1\n\n1,abc,0.1\n") == 3);
  CHECK(error_line("91,0,0.1\n") == 1);
  CHECK(error_line("0,0,-0.1\n") == 1);
  CHECK(error_line("0,0,4\n") == 1);
}

TEST_CASE("estimate csv") {
  std::ostringstream out;
  write_estimate_csv(out, 2, 21, 21.0, AreaEstimate{11.0 / 21.0, 11, 11.0, 21.0});
  CHECK(out.str() == "n_caps,P,effective_P,fraction,points_inside\n2,21,21,0.5238095238095238,11\n");
}

TEST_CASE("sweep csv round trip is exact") {
  const TrialPlan plan{{SampleFamily::LatLon, 6}, uniform_fraction_grid(7), 50, 3};
  const auto rows = run_sweep(plan);
  std::ostringstream out;
  write_sweep_csv(out, rows);
  CHECK(out.str().rfind("family,P,effective_P,cap_fraction,n,rmse,max_error\nlatlon,62,", 0) == 0);
  std::istringstream in(out.str());
  CHECK(read_sweep_csv(in) == rows);

  std::istringstream bad("family,P,effective_P,cap_fraction,n,rmse,max_error\nhex,1,1,0.1,1,0,0\n");
  try {
    read_sweep_csv(bad);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
  }
}

TEST_CASE("fit csv round trip") {
  const std::vector<FitRow> rows{{"fibonacci", "P", 0.361, -0.7466, 0.01},
                                 {"latlon/fibonacci", "effective_P", 1.08, -0.013, 0.0}};
  std::ostringstream out;
  write_fit_csv(out, rows);
  CHECK(out.str() ==
        "family,x_variable,k,a,residual\n"
        "fibonacci,P,0.361,-0.7466,0.01\n"
        "latlon/fibonacci,effective_P,1.08,-0.013,0\n");
  std::istringstream in(out.str());
  const auto back = read_fit_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(back[1].family == "latlon/fibonacci");
  CHECK(back[1].k == 1.08);
}
