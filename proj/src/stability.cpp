#include "quadcycle/stability.hpp"

#include <algorithm>
#include <cmath>

#include "quadcycle/error.hpp"
#include "quadcycle/tolerances.hpp"

namespace quadcycle {

namespace {

// Relative slack on h(r) <= sqrt(delta_nh) so that the computed endpoints
// themselves classify as stable.
constexpr double kRatioEndpointSlack = 1e-12;

double polish_sqrt_delta_nh() {
  const double k = 460.0 + 60.0 * std::sqrt(201.0);
  const double k13 = std::cbrt(k);
  const double k23 = k13 * k13;
  const double num = k23 - 2.0 * k13 - 80.0;
  const double closed_form = num * num / (36.0 * k23);

  const Polynomial defining{-2.0, 7.0, 1.0, 1.0};
  double s = std::sqrt(closed_form);
  // The closed form is within a few ulps; bracket tightly and let the
  // safeguarded Newton iteration finish.
  const double lo = s * (1.0 - 1e-6);
  const double hi = s * (1.0 + 1e-6);
  s = bracketed_root(defining, lo, hi);
  return s;
}

void require_branch(const PerturbedDiscriminant& d, Branch branch) {
  if (d.is_negative()) throw Error(ErrorCode::NoCycleExists, "delta < 0, the map has no 3-cycles");
  if ((branch == Branch::Degenerate) != d.is_degenerate()) {
    throw Error(ErrorCode::BranchMismatch,
                std::string(to_string(branch)) + " does not match delta = " + std::to_string(d.value));
  }
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::AsymptoticallyStable ? "AsymptoticallyStable" : "Unstable";
}

double multiplier_closed_form(Branch branch, double delta) {
  if (delta < 0.0) throw Error(ErrorCode::NegativeDelta, "delta must be nonnegative");
  const double s = std::sqrt(delta);
  switch (branch) {
    case Branch::PlusDelta: return -delta * s - delta - 7.0 * s + 1.0;
    case Branch::MinusDelta: return delta * s - delta + 7.0 * s + 1.0;
    case Branch::Degenerate: return 1.0;
  }
  return 1.0;
}

double multiplier_from_points(const QuadraticMap& m, const ThreeCycle& cycle) {
  double h = 1.0;
  for (double x : cycle.points) h *= m.derivative(x);
  return h;
}

double sqrt_delta_nh() {
  static const double s = polish_sqrt_delta_nh();
  return s;
}

double delta_nh() {
  static const double d = sqrt_delta_nh() * sqrt_delta_nh();
  return d;
}

StabilityReport classify_stability(const QuadraticMap& m, Branch branch) {
  const PerturbedDiscriminant d = perturbed_discriminant(m);
  require_branch(d, branch);

  const double delta = d.effective();
  const double h = multiplier_closed_form(branch, delta);
  const bool hyperbolic = std::abs(std::abs(h) - 1.0) > tol::hyp;

  Verdict verdict = Verdict::Unstable;
  if (branch == Branch::PlusDelta && delta > 0.0 && delta <= delta_nh() + d.tolerance) {
    verdict = Verdict::AsymptoticallyStable;
  }
  return {h, hyperbolic, verdict};
}

double schwarzian(const QuadraticMap& m, double x) {
  const double d = m.derivative(x);
  if (std::abs(d) <= tol::domain) {
    throw Error(ErrorCode::CriticalPoint, "Schwarzian is undefined at the critical point");
  }
  return -6.0 * m.a() * m.a() / (d * d);
}

double schwarzian(const Polynomial& f, double x) {
  const Polynomial d1 = f.derivative();
  const Polynomial d2 = d1.derivative();
  const Polynomial d3 = d2.derivative();
  const double f1 = d1(x);
  if (std::abs(f1) <= tol::domain * std::max(1.0, abs_scale(d1, x))) {
    throw Error(ErrorCode::CriticalPoint, "f' vanishes");
  }
  const double ratio = d2(x) / f1;
  return d3(x) / f1 - 1.5 * ratio * ratio;
}

DegenerateFactorization degenerate_factorization(const QuadraticMap& m) {
  const PerturbedDiscriminant d = perturbed_discriminant(m);
  if (!d.is_degenerate()) {
    throw Error(ErrorCode::NotDegenerate, "delta = " + std::to_string(d.value) + " is not zero");
  }
  const double a = m.a();
  const double b = m.b();
  return {
      Polynomial{b * b - 2.0 * b - 7.0, 4.0 * a * (b - 1.0), 4.0 * a * a},
      Polynomial{b * b * b + b * b - 9.0 * b - 1.0, 2.0 * a * (3.0 * b * b + 2.0 * b - 9.0),
                 4.0 * a * a * (3.0 * b + 1.0), 8.0 * a * a * a},
      1.0 / (256.0 * a),
  };
}

const std::array<RatioInterval, 3>& stable_ratio_intervals() {
  static const std::array<RatioInterval, 3> intervals = [] {
    const RealCubicRoots& q0 = q0_roots();
    // h(x) = s  <=>  Q_s(x) = 0, and Q_s changes sign between q_i<0> and the
    // next excluded point (or the Cauchy bound for the last interval).
    const Polynomial q = q_beta(sqrt_delta_nh());
    const double bound = 1.0 + std::max({std::abs(1.0 - sqrt_delta_nh()), 2.0 + sqrt_delta_nh(), 1.0});
    return std::array<RatioInterval, 3>{{
        {q0.q1, bracketed_root(q, q0.q1, -1.0)},
        {q0.q2, bracketed_root(q, q0.q2, 0.0)},
        {q0.q3, bracketed_root(q, q0.q3, bound)},
    }};
  }();
  return intervals;
}

Verdict stability_from_ratio(double r) {
  const double h = h_ratio(r);
  const double upper = sqrt_delta_nh() * (1.0 + kRatioEndpointSlack);
  return h > 0.0 && h <= upper ? Verdict::AsymptoticallyStable : Verdict::Unstable;
}

}  // namespace quadcycle
