#pragma once

#include <array>
#include <string_view>

#include "quadcycle/cycle.hpp"
#include "quadcycle/polynomial.hpp"

namespace quadcycle {

enum class Verdict { AsymptoticallyStable, Unstable };

std::string_view to_string(Verdict v) noexcept;

struct StabilityReport {
  double multiplier;  // signed product g'(x1) g'(x2) g'(x3)
  bool hyperbolic;
  Verdict verdict;
};

/// g^(3)(x) - x = scale * p1(x) * p2(x)^2 for a map with delta = 0.
struct DegenerateFactorization {
  Polynomial p1;  // fixed-point factor, roots are equilibria
  Polynomial p2;  // roots are the points of C<0>
  double scale;   // 1 / (256 a)
};

/// Signed multiplier as a function of delta:
///   PlusDelta:  -d^{3/2} - d - 7 d^{1/2} + 1
///   MinusDelta:  d^{3/2} - d + 7 d^{1/2} + 1
///   Degenerate:  1
/// Throws NegativeDelta for delta < 0.
double multiplier_closed_form(Branch branch, double delta);

/// Product of 2a x_i + b over the cycle.
double multiplier_from_points(const QuadraticMap& m, const ThreeCycle& cycle);

/// The positive delta at which the PlusDelta multiplier reaches -1 (about 0.0741).
double delta_nh();

/// sqrt(delta_nh()), the positive root of s^3 + s^2 + 7s - 2.
double sqrt_delta_nh();

/// Stable window is delta in (0, delta_nh] on the PlusDelta branch; every other
/// cycle is unstable. The endpoint delta_nh is accepted up to the map's
/// degeneracy tolerance.
StabilityReport classify_stability(const QuadraticMap& m, Branch branch);

/// Sg(x) = -6a^2 / (2ax + b)^2. Throws CriticalPoint at x = -b / (2a).
double schwarzian(const QuadraticMap& m, double x);

/// f'''/f' - (3/2) (f''/f')^2 for a general polynomial. Throws CriticalPoint
/// where f' vanishes.
double schwarzian(const Polynomial& f, double x);

/// Throws NotDegenerate unless |delta| is inside the degenerate band.
DegenerateFactorization degenerate_factorization(const QuadraticMap& m);

/// Half-open ratio interval (lower, upper].
struct RatioInterval {
  double lower;
  double upper;
};

/// The three windows (q_i<0>, r_nh,i] of ratios whose PlusDelta cycle is
/// asymptotically stable. Upper ends solve h(x) = sqrt(delta_nh).
const std::array<RatioInterval, 3>& stable_ratio_intervals();

/// AsymptoticallyStable iff h(r) lies in (0, sqrt(delta_nh)].
Verdict stability_from_ratio(double r);

}  // namespace quadcycle
