#pragma once

#include <random>
#include <string>

#include "quadcycle/cycle.hpp"

namespace quadcycle {

/// Side-by-side comparison of the closed-form cycles of one map with the
/// oracle's brute-force cycles.
struct VerificationResult {
  ExistenceClass existence = ExistenceClass::NoCycles;
  double delta = 0.0;
  int closed_form_cycles = 0;
  int oracle_cycles = 0;
  double point_deviation = 0.0;       // max over matched points, relative to max(1, |x|)
  double multiplier_deviation = 0.0;  // relative to max(1, |H|)
  double point_tolerance = 0.0;
  double multiplier_tolerance = 0.0;
  bool near_degenerate = false;  // 0 < delta < 1e-8: the oracle may merge the cycles
  std::string error;             // set when either path threw

  bool counts_agree() const noexcept;
  bool points_agree() const noexcept { return error.empty() && point_deviation <= point_tolerance; }
  bool multipliers_agree() const noexcept {
    return error.empty() && multiplier_deviation <= multiplier_tolerance;
  }
  bool passed() const noexcept { return counts_agree() && points_agree() && multipliers_agree(); }
};

inline constexpr double kPointMatchTolerance = 1e-7;
inline constexpr double kMultiplierMatchTolerance = 1e-6;

VerificationResult verify_map(const QuadraticMap& m);

/// a uniform on [-5, 5] with |a| >= 0.1, b and c uniform on [-5, 5].
QuadraticMap random_map(std::mt19937_64& rng);

}  // namespace quadcycle
