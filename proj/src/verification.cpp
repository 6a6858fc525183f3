#include "quadcycle/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "quadcycle/error.hpp"
#include "quadcycle/oracle.hpp"
#include "quadcycle/stability.hpp"

namespace quadcycle {

namespace {

constexpr double kNearDegenerateBand = 1e-8;
constexpr double kMinAbsA = 0.1;

struct Cycle {
  std::array<double, 3> sorted;
  double multiplier;
};

Cycle make_cycle(std::array<double, 3> pts, double multiplier) {
  std::sort(pts.begin(), pts.end());
  return {pts, multiplier};
}

double point_gap(const Cycle& lhs, const Cycle& rhs) {
  double gap = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    gap = std::max(gap, std::abs(lhs.sorted[i] - rhs.sorted[i]) / std::max(1.0, std::abs(lhs.sorted[i])));
  }
  return gap;
}

double multiplier_gap(const Cycle& closed, const Cycle& oracle) {
  return std::abs(closed.multiplier - oracle.multiplier) / std::max(1.0, std::abs(closed.multiplier));
}

}  // namespace

bool VerificationResult::counts_agree() const noexcept {
  if (!error.empty()) return false;
  if (closed_form_cycles == oracle_cycles) return true;
  return near_degenerate && oracle_cycles >= 1 && oracle_cycles <= 2;
}

VerificationResult verify_map(const QuadraticMap& m) {
  VerificationResult res;
  const PerturbedDiscriminant d = perturbed_discriminant(m);
  res.existence = classify_existence(d);
  res.delta = d.value;
  res.closed_form_cycles = cycle_count(res.existence);
  res.near_degenerate = d.value > 0.0 && d.value < kNearDegenerateBand;
  res.point_tolerance = kPointMatchTolerance;
  res.multiplier_tolerance = kMultiplierMatchTolerance;
  if (res.near_degenerate) {
    // Root separation is O(sqrt(delta)).
    res.point_tolerance = std::max(kPointMatchTolerance, 10.0 * std::sqrt(d.value));
    res.multiplier_tolerance = std::max(kMultiplierMatchTolerance, 100.0 * std::sqrt(d.value));
  }

  std::vector<Cycle> closed;
  std::vector<Cycle> oracle;
  try {
    for (Branch branch : branches_for(m)) {
      const ThreeCycle c = cycle_points(m, branch);
      closed.push_back(make_cycle(c.points, multiplier_closed_form(branch, d.effective())));
    }
    const oracle::OracleResult found = oracle::find_cycles(m);
    for (std::size_t i = 0; i < found.cycles.size(); ++i) {
      oracle.push_back(make_cycle(found.cycles[i], found.multipliers[i]));
    }
  } catch (const Error& e) {
    res.error = e.what();
    return res;
  }
  res.oracle_cycles = static_cast<int>(oracle.size());

  if (closed.empty() || oracle.empty()) {
    if (!closed.empty() || !oracle.empty()) {
      res.point_deviation = std::numeric_limits<double>::infinity();
      res.multiplier_deviation = std::numeric_limits<double>::infinity();
    }
    return res;
  }

  // Each closed-form cycle is matched to an oracle cycle; with two cycles on
  // both sides the better of the two assignments is taken.
  double best_points = std::numeric_limits<double>::infinity();
  double best_mult = std::numeric_limits<double>::infinity();
  const auto consider = [&](const std::vector<std::size_t>& assignment) {
    double pts = 0.0;
    double mult = 0.0;
    for (std::size_t i = 0; i < closed.size(); ++i) {
      pts = std::max(pts, point_gap(closed[i], oracle[assignment[i]]));
      mult = std::max(mult, multiplier_gap(closed[i], oracle[assignment[i]]));
    }
    if (pts < best_points) {
      best_points = pts;
      best_mult = mult;
    }
  };
  if (closed.size() == oracle.size()) {
    std::vector<std::size_t> assignment(closed.size());
    for (std::size_t i = 0; i < assignment.size(); ++i) assignment[i] = i;
    do {
      consider(assignment);
    } while (std::next_permutation(assignment.begin(), assignment.end()));
  } else {
    // Merged cycles near delta = 0: every closed-form cycle against its nearest.
    std::vector<std::size_t> assignment(closed.size(), 0);
    for (std::size_t i = 0; i < closed.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < oracle.size(); ++j) {
        const double gap = point_gap(closed[i], oracle[j]);
        if (gap < best) {
          best = gap;
          assignment[i] = j;
        }
      }
    }
    consider(assignment);
  }
  res.point_deviation = best_points;
  res.multiplier_deviation = best_mult;
  return res;
}

QuadraticMap random_map(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coeff(-5.0, 5.0);
  double a = 0.0;
  do {
    a = coeff(rng);
  } while (std::abs(a) < kMinAbsA);
  const double b = coeff(rng);
  const double c = coeff(rng);
  return {a, b, c};
}

}  // namespace quadcycle
