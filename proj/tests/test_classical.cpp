#include <cmath>

#include "doctest.h"
#include "quadcycle/classical.hpp"
#include "quadcycle/error.hpp"
#include "quadcycle/oracle.hpp"
#include "quadcycle/stability.hpp"

using namespace quadcycle;

namespace {

// Printed values are truncated, not rounded: 1.2469... appears as 1.246.
bool matches_3_decimals(double value, double printed) {
  return std::abs(std::trunc(value * 1000.0) / 1000.0 - printed) < 1e-9;
}

bool same_set_3_decimals(std::array<double, 3> got, std::array<double, 3> printed) {
  std::sort(got.begin(), got.end());
  std::sort(printed.begin(), printed.end());
  for (std::size_t i = 0; i < 3; ++i) {
    if (!matches_3_decimals(got[i], printed[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("from_offset") {
  const QuadraticMap m = from_offset(-1.75);
  CHECK(m.a() == 1.0);
  CHECK(m.b() == 0.0);
  CHECK(m.c() == -1.75);
  CHECK(perturbed_discriminant(m).value == 0.0);
  CHECK(classify_existence(m) == ExistenceClass::UniqueCycle);

  CHECK(perturbed_discriminant(from_offset(0.0)).value == -7.0);
  CHECK(classify_existence(from_offset(0.0)) == ExistenceClass::NoCycles);

  CHECK(perturbed_discriminant(from_offset(-2.0)).value == 1.0);
  CHECK(classify_existence(from_offset(-2.0)) == ExistenceClass::TwoCycles);
  CHECK(oracle::find_cycles(from_offset(-2.0)).cycles.size() == 2);

  for (double c : {-3.0, -1.9, -1.0, 0.25, 2.0}) {
    CHECK(perturbed_discriminant(from_offset(c)).value == doctest::Approx(-4.0 * c - 7.0));
  }
}

TEST_CASE("from_logistic") {
  const double lam = 1.0 + 2.0 * std::sqrt(2.0);
  const PerturbedDiscriminant d = perturbed_discriminant(from_logistic(lam));
  CHECK(d.is_degenerate());
  CHECK(std::abs(d.value) <= 1e-12);

  const QuadraticMap four = from_logistic(4.0);
  CHECK(four.a() == -4.0);
  CHECK(four.b() == 4.0);
  CHECK(four.c() == 0.0);
  CHECK(perturbed_discriminant(four).value == 1.0);

  CHECK(perturbed_discriminant(from_logistic(3.5)).value == -1.75);
  CHECK(classify_existence(from_logistic(3.5)) == ExistenceClass::NoCycles);

  CHECK_THROWS_AS(from_logistic(0.0), Error);
  try {
    from_logistic(0.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateFamily);
  }
  CHECK(family_map(Family::Logistic, 4.0).a() == -4.0);
  CHECK(family_map(Family::Offset, -2.0).c() == -2.0);
}

TEST_CASE("thresholds") {
  const FamilyThresholds off = thresholds(Family::Offset);
  REQUIRE(off.existence_boundary.size() == 1);
  REQUIRE(off.stability_boundary.size() == 1);
  CHECK(off.existence_boundary[0] == -1.75);
  CHECK(off.stability_boundary[0] == doctest::Approx(-1.768529152467685).epsilon(1e-14));
  CHECK(matches_3_decimals(off.stability_boundary[0], -1.768));

  const FamilyThresholds lg = thresholds(Family::Logistic);
  REQUIRE(lg.existence_boundary.size() == 2);
  REQUIRE(lg.stability_boundary.size() == 2);
  CHECK(std::abs(lg.existence_boundary[0] - (1.0 - 2.0 * std::sqrt(2.0))) <= 1e-12);
  CHECK(std::abs(lg.existence_boundary[1] - (1.0 + 2.0 * std::sqrt(2.0))) <= 1e-12);
  CHECK(lg.stability_boundary[0] == doctest::Approx(-1.8414990075435078).epsilon(1e-14));
  CHECK(lg.stability_boundary[1] == doctest::Approx(3.8414990075435078).epsilon(1e-14));
  CHECK(matches_3_decimals(lg.stability_boundary[0], -1.841));
  CHECK(matches_3_decimals(lg.stability_boundary[1], 3.841));

  // Boundaries reproduce delta = 0 and delta = delta_nh.
  for (const auto& [family, t] : {std::pair{Family::Offset, off}, std::pair{Family::Logistic, lg}}) {
    for (double p : t.existence_boundary) {
      const PerturbedDiscriminant d = perturbed_discriminant(family_map(family, p));
      CHECK(std::abs(d.value) <= d.tolerance);
    }
    for (double p : t.stability_boundary) {
      const PerturbedDiscriminant d = perturbed_discriminant(family_map(family, p));
      CHECK(std::abs(d.value - delta_nh()) <= d.tolerance);
    }
  }
}

TEST_CASE("stable window of x^2 + c") {
  const double c_nh = thresholds(Family::Offset).stability_boundary[0];
  for (int i = 0; i <= 200; ++i) {
    const double c = c_nh + (-1.75 - c_nh) * i / 201.0;
    CAPTURE(c);
    const QuadraticMap m = from_offset(c);
    REQUIRE(classify_existence(m) == ExistenceClass::TwoCycles);
    CHECK(classify_stability(m, Branch::PlusDelta).verdict == Verdict::AsymptoticallyStable);
    CHECK(classify_stability(m, Branch::MinusDelta).verdict == Verdict::Unstable);
  }
  // Just outside the window.
  for (double c : {c_nh - 1e-6, -1.8, -2.0}) {
    CHECK(classify_stability(from_offset(c), Branch::PlusDelta).verdict == Verdict::Unstable);
  }
  CHECK(classify_existence(from_offset(-1.75 + 1e-6)) == ExistenceClass::NoCycles);
}

TEST_CASE("stable window of the logistic map") {
  const double lo = 1.0 + 2.0 * std::sqrt(2.0);
  const double hi = thresholds(Family::Logistic).stability_boundary[1];
  for (int i = 1; i <= 200; ++i) {
    const double lam = lo + (hi - lo) * i / 200.0;
    CAPTURE(lam);
    const QuadraticMap m = from_logistic(lam);
    if (classify_existence(m) != ExistenceClass::TwoCycles) continue;  // within tol of lo
    CHECK(classify_stability(m, Branch::PlusDelta).verdict == Verdict::AsymptoticallyStable);
    CHECK(classify_stability(m, Branch::MinusDelta).verdict == Verdict::Unstable);
  }
  CHECK(classify_stability(from_logistic(hi + 1e-6), Branch::PlusDelta).verdict == Verdict::Unstable);
  CHECK(classify_stability(from_logistic(3.9), Branch::PlusDelta).verdict == Verdict::Unstable);

  // Mirror window on the negative side: [1 - sqrt(8 + delta_nh), 1 - 2 sqrt 2).
  const double nlo = thresholds(Family::Logistic).stability_boundary[0];
  for (double lam : {nlo + 1e-6, -1.835, -1.83}) {
    CHECK(classify_stability(from_logistic(lam), Branch::PlusDelta).verdict == Verdict::AsymptoticallyStable);
  }
}

TEST_CASE("printed cycle points") {
  SUBCASE("x^2 - 7/4") {
    const ThreeCycle cyc = cycle_points(from_offset(-1.75), Branch::Degenerate);
    CHECK(same_set_3_decimals(cyc.points, {-0.054, -1.746, 1.301}));
    CHECK(cyc.points[0] == doctest::Approx(-0.054958132087371191).epsilon(1e-12));
    CHECK(classify_stability(from_offset(-1.75), Branch::Degenerate).verdict == Verdict::Unstable);
  }
  SUBCASE("lambda = 1 + 2 sqrt 2") {
    const QuadraticMap m = from_logistic(1.0 + 2.0 * std::sqrt(2.0));
    REQUIRE(classify_existence(m) == ExistenceClass::UniqueCycle);
    const ThreeCycle cyc = cycle_points(m, Branch::Degenerate);
    CHECK(same_set_3_decimals(cyc.points, {0.514, 0.956, 0.159}));
    std::array<double, 3> pts = cyc.points;
    std::sort(pts.begin(), pts.end());
    CHECK(pts[0] == doctest::Approx(0.15992881844625639).epsilon(1e-9));
    CHECK(pts[1] == doctest::Approx(0.51435527706199049).epsilon(1e-9));
    CHECK(pts[2] == doctest::Approx(0.95631784197362384).epsilon(1e-9));
  }
  SUBCASE("lambda = 1 - 2 sqrt 2") {
    const QuadraticMap m = from_logistic(1.0 - 2.0 * std::sqrt(2.0));
    REQUIRE(classify_existence(m) == ExistenceClass::UniqueCycle);
    const ThreeCycle cyc = cycle_points(m, Branch::Degenerate);
    CHECK(same_set_3_decimals(cyc.points, {0.469, -0.455, 1.212}));
    std::array<double, 3> pts = cyc.points;
    std::sort(pts.begin(), pts.end());
    CHECK(pts[0] == doctest::Approx(-0.455454871607185859).epsilon(1e-9));
    CHECK(pts[1] == doctest::Approx(0.469942399484474883).epsilon(1e-9));
    CHECK(pts[2] == doctest::Approx(1.212053391783697397).epsilon(1e-9));
  }
}

TEST_CASE("cycle polynomial of x^2 - 7/4") {
  const CyclePolynomial r = cycle_polynomial(from_offset(-1.75), Branch::Degenerate);
  CHECK(std::abs(r.c2 - 0.5) <= 1e-12);
  CHECK(std::abs(r.c1 + 2.25) <= 1e-12);
  CHECK(std::abs(r.c0 + 0.125) <= 1e-12);
}
