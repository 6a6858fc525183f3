#include "quadcycle/classical.hpp"

#include <cmath>

#include "quadcycle/error.hpp"
#include "quadcycle/stability.hpp"

namespace quadcycle {

std::string_view to_string(Family f) noexcept {
  return f == Family::Offset ? "offset" : "logistic";
}

QuadraticMap from_offset(double c) { return {1.0, 0.0, c}; }

QuadraticMap from_logistic(double lambda) {
  if (lambda == 0.0) throw Error(ErrorCode::DegenerateFamily, "lambda = 0 gives a = 0");
  return {-lambda, lambda, 0.0};
}

QuadraticMap family_map(Family family, double param) {
  return family == Family::Offset ? from_offset(param) : from_logistic(param);
}

FamilyThresholds thresholds(Family family) {
  const double dnh = delta_nh();
  if (family == Family::Offset) {
    return {{-7.0 / 4.0}, {-(7.0 + dnh) / 4.0}};
  }
  const double e = 2.0 * std::sqrt(2.0);
  const double s = std::sqrt(8.0 + dnh);
  return {{1.0 - e, 1.0 + e}, {1.0 - s, 1.0 + s}};
}

}  // namespace quadcycle
