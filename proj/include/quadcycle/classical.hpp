#pragma once

#include <string_view>
#include <vector>

#include "quadcycle/cycle.hpp"

namespace quadcycle {

enum class Family { Offset, Logistic };

std::string_view to_string(Family f) noexcept;

/// x^2 + c. delta = -4c - 7.
QuadraticMap from_offset(double c);

/// lambda x (1 - x), i.e. a = -lambda, b = lambda, c = 0. delta = lambda^2 - 2 lambda - 7.
/// Throws DegenerateFamily for lambda = 0.
QuadraticMap from_logistic(double lambda);

QuadraticMap family_map(Family family, double param);

/// Parameter values where delta = 0 (existence) and delta = delta_nh (stability).
struct FamilyThresholds {
  std::vector<double> existence_boundary;
  std::vector<double> stability_boundary;
};

FamilyThresholds thresholds(Family family);

}  // namespace quadcycle
