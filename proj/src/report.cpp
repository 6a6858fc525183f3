#include "quadcycle/report.hpp"

namespace quadcycle {

AnalysisReport analyze(const QuadraticMap& m) {
  AnalysisReport report{m, std::nullopt, perturbed_discriminant(m), ExistenceClass::NoCycles, {}, std::nullopt};
  report.existence = classify_existence(report.delta);
  for (Branch branch : branches_for(m)) {
    const ThreeCycle cycle = cycle_points(m, branch);
    report.branches.push_back(
        {cycle, cycle_polynomial(m, branch), cycle.ratio(), classify_stability(m, branch)});
  }
  return report;
}

AnalysisReport analyze_family(Family family, double parameter) {
  AnalysisReport report = analyze(family_map(family, parameter));
  report.family = FamilyInput{family, parameter};
  report.thresholds = thresholds(family);
  return report;
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
  using nlohmann::ordered_json;

  ordered_json input = ordered_json::object();
  if (report.family) {
    input["family"] = to_string(report.family->family);
    input["parameter"] = report.family->parameter;
  }
  input["a"] = report.map.a();
  input["b"] = report.map.b();
  input["c"] = report.map.c();

  ordered_json cycles = ordered_json::array();
  for (const BranchReport& br : report.branches) {
    ordered_json entry;
    entry["branch"] = to_string(br.cycle.branch);
    entry["points"] = br.cycle.points;
    entry["cycle_polynomial"] = {{"c2", br.polynomial.c2}, {"c1", br.polynomial.c1}, {"c0", br.polynomial.c0}};
    entry["ratio"] = br.ratio;
    entry["multiplier"] = br.stability.multiplier;
    entry["hyperbolic"] = br.stability.hyperbolic;
    entry["verdict"] = to_string(br.stability.verdict);
    cycles.push_back(std::move(entry));
  }

  ordered_json out;
  out["input"] = std::move(input);
  out["delta"] = report.delta.value;
  out["delta_tolerance"] = report.delta.tolerance;
  out["degenerate_by_tolerance"] = report.snapped_to_degenerate();
  out["existence"] = to_string(report.existence);
  out["cycles"] = std::move(cycles);
  if (report.thresholds) {
    out["thresholds"] = {
        {"existence_boundary", report.thresholds->existence_boundary},
        {"stability_boundary", report.thresholds->stability_boundary},
        {"delta_nh", delta_nh()},
    };
  }
  return out;
}

}  // namespace quadcycle
