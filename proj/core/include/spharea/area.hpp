#pragma once

// Weighted point-counting estimates of region areas, reported as fractions
// of the sphere area.

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "spharea/geometry.hpp"
#include "spharea/lattice.hpp"
#include "spharea/summation.hpp"

namespace spharea {

struct AreaEstimate {
  double fraction = 0.0;  // weight_inside / weight_total
  std::int64_t points_inside = 0;
  double weight_inside = 0.0;
  double weight_total = 0.0;
};

/// Membership predicate over points of the sphere.
template <class R>
concept RegionIndicator = requires(const R& region, const GeoPoint& p) {
  { region(p) } -> std::convertible_to<bool>;
};

namespace detail {

// `inside(i)` decides lattice point i. Sums run in lattice order with
// compensation, so the result is reproducible for a given lattice.
template <class Inside>
AreaEstimate accumulate_estimate(const Lattice& lattice, Inside&& inside) {
  if (lattice.size() == 0) throw std::invalid_argument("lattice is empty");
  const auto points = lattice.points();
  CompensatedSum weight_inside;
  CompensatedSum weight_total;
  std::int64_t count = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double w = points[i].weight;
    weight_total.add(w);
    if (inside(i)) {
      weight_inside.add(w);
      ++count;
    }
  }
  AreaEstimate out;
  out.points_inside = count;
  out.weight_inside = weight_inside.value();
  out.weight_total = weight_total.value();
  if (!(out.weight_total > 0.0)) {
    throw std::invalid_argument("lattice weights sum to zero; cannot normalize");
  }
  out.fraction = out.weight_inside / out.weight_total;
  return out;
}

}  // namespace detail

/// Estimate for an arbitrary region.
template <RegionIndicator R>
AreaEstimate estimate_area(const Lattice& lattice, const R& region) {
  const auto points = lattice.points();
  return detail::accumulate_estimate(
      lattice, [&](std::size_t i) { return static_cast<bool>(region(points[i].point)); });
}

/// Estimate for a single cap; same result as the predicate overload with
/// point_in_cap.
AreaEstimate estimate_area(const Lattice& lattice, const Cap& cap);

/// Union of caps; a point counts once however many caps contain it. An
/// empty list gives fraction 0.
AreaEstimate estimate_cap_union_area(const Lattice& lattice, std::span<const Cap> caps);

/// |estimate - true_fraction|.
double absolute_error(double estimate, double true_fraction);

/// Sum of weights: the size of a homogeneous lattice doing the same work.
double effective_point_count(const Lattice& lattice);

}  // namespace spharea
