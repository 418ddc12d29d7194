#include "spharea/area.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace spharea {

AreaEstimate estimate_area(const Lattice& lattice, const Cap& cap) {
  const CapMembership membership(cap);
  const auto points = lattice.points();
  const auto vectors = lattice.unit_vectors();
  return detail::accumulate_estimate(lattice, [&](std::size_t i) {
    return membership.contains(points[i].point, vectors[i]);
  });
}

AreaEstimate estimate_cap_union_area(const Lattice& lattice, std::span<const Cap> caps) {
  std::vector<CapMembership> members;
  members.reserve(caps.size());
  for (const auto& cap : caps) members.emplace_back(cap);
  const auto points = lattice.points();
  const auto vectors = lattice.unit_vectors();
  return detail::accumulate_estimate(lattice, [&](std::size_t i) {
    return std::any_of(members.begin(), members.end(), [&](const CapMembership& m) {
      return m.contains(points[i].point, vectors[i]);
    });
  });
}

double absolute_error(double estimate, double true_fraction) {
  if (!(estimate >= 0.0 && estimate <= 1.0 && true_fraction >= 0.0 && true_fraction <= 1.0)) {
    throw std::invalid_argument("area fractions must lie in [0, 1]");
  }
  return std::abs(estimate - true_fraction);
}

double effective_point_count(const Lattice& lattice) {
  if (lattice.size() == 0) throw std::invalid_argument("lattice is empty");
  CompensatedSum total;
  for (const auto& wp : lattice.points()) total.add(wp.weight);
  return total.value();
}

}  // namespace spharea
