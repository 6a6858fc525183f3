#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "quadcycle/classical.hpp"
#include "quadcycle/cycle.hpp"
#include "quadcycle/stability.hpp"

namespace quadcycle {

struct BranchReport {
  ThreeCycle cycle;
  CyclePolynomial polynomial;
  double ratio;  // of the canonical representative (x1, x2, x3)
  StabilityReport stability;
};

struct FamilyInput {
  Family family;
  double parameter;
};

/// Everything known in closed form about the 3-cycles of one map.
struct AnalysisReport {
  QuadraticMap map;
  std::optional<FamilyInput> family;
  PerturbedDiscriminant delta;
  ExistenceClass existence;
  std::vector<BranchReport> branches;  // PlusDelta first
  std::optional<FamilyThresholds> thresholds;

  /// True when delta is nonzero but fell inside the degenerate band.
  bool snapped_to_degenerate() const noexcept {
    return existence == ExistenceClass::UniqueCycle && delta.value != 0.0;
  }
};

AnalysisReport analyze(const QuadraticMap& m);
AnalysisReport analyze_family(Family family, double parameter);

/// Key order is fixed; the set of keys depends only on the existence class
/// and on whether a family was analyzed.
nlohmann::ordered_json to_json(const AnalysisReport& report);

}  // namespace quadcycle
