#include "quadcycle/tolerances.hpp"

#include <cmath>
#include <cstdlib>

namespace quadcycle::tol {

namespace {

double read_scale() {
  const char* raw = std::getenv("QUADCYCLE_TOL");
  if (raw == nullptr) return 1.0;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || !std::isfinite(v) || v <= 0.0) return 1.0;
  return v;
}

}  // namespace

double cycle() {
  static const double value = 1e-8 * read_scale();
  return value;
}

}  // namespace quadcycle::tol
