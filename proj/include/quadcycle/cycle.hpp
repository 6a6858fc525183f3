#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "quadcycle/polynomial.hpp"

namespace quadcycle {

/// g(x) = a x^2 + b x + c with a != 0.
class QuadraticMap {
 public:
  /// Throws InvalidMap if |a| <= tol::domain or any coefficient is not finite.
  QuadraticMap(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  double operator()(double x) const noexcept { return (a_ * x + b_) * x + c_; }
  double derivative(double x) const noexcept { return 2.0 * a_ * x + b_; }

  /// Magnitude |a| x^2 + |b| |x| + |c| of the terms summed in g(x).
  double term_scale(double x) const noexcept;

  Polynomial as_polynomial() const { return Polynomial{c_, b_, a_}; }

 private:
  double a_;
  double b_;
  double c_;
};

/// delta = b^2 - 4ac - 2b - 7 together with the band |delta| <= tolerance
/// that is treated as delta = 0.
struct PerturbedDiscriminant {
  double value;
  double tolerance;

  bool is_degenerate() const noexcept;
  bool is_negative() const noexcept { return value < -tolerance; }
  /// delta snapped to 0 inside the degenerate band.
  double effective() const noexcept { return is_degenerate() ? 0.0 : value; }
};

PerturbedDiscriminant perturbed_discriminant(const QuadraticMap& m);

/// 1e-9 * max(1, b^2, |4ac|).
double degenerate_tolerance(const QuadraticMap& m);

enum class ExistenceClass { NoCycles, UniqueCycle, TwoCycles };
enum class Branch { PlusDelta, MinusDelta, Degenerate };

std::string_view to_string(ExistenceClass e) noexcept;
std::string_view to_string(Branch b) noexcept;

ExistenceClass classify_existence(const PerturbedDiscriminant& delta) noexcept;
ExistenceClass classify_existence(const QuadraticMap& m);

/// Number of 3-cycles implied by an existence class.
int cycle_count(ExistenceClass e) noexcept;

/// The branches whose cycles exist for this map, PlusDelta first.
std::vector<Branch> branches_for(const QuadraticMap& m);

/// A 3-cycle stored in canonical order: points[i] is built from the i-th
/// ascending root of the branch's Q polynomial, and g(x1) = x2, g(x2) = x3,
/// g(x3) = x1.
struct ThreeCycle {
  Branch branch;
  std::array<double, 3> points;

  double ratio() const noexcept {
    return (points[2] - points[1]) / (points[1] - points[0]);
  }
};

/// Points of C<delta> (PlusDelta), C<-delta> (MinusDelta) or C<0> (Degenerate).
///
/// x_i = (-b + beta + 1) / (2a) + 1 / (a q_i) with q_i the ordered roots of
/// Q_beta and beta = +sqrt(delta), -sqrt(delta) or 0 respectively.
/// Throws NoCycleExists for delta < 0, BranchMismatch when the branch does not
/// fit the sign of delta, and CycleValidation if the computed orbit fails to
/// close within tol::cycle().
ThreeCycle cycle_points(const QuadraticMap& m, Branch branch);

/// Monic cubic X^3 + c2 X^2 + c1 X + c0 whose roots are a cycle's points.
struct CyclePolynomial {
  double c2;
  double c1;
  double c0;

  Polynomial as_polynomial() const { return Polynomial{c0, c1, c2, 1.0}; }
};

/// Upper signs for PlusDelta. Any branch is accepted when delta = 0; the
/// coefficients of both signs then coincide.
CyclePolynomial cycle_polynomial(const QuadraticMap& m, Branch branch);

/// The unique map with (x, y, z) as a 3-cycle representative:
/// g(x) = y, g(y) = z, g(z) = x. Throws DegenerateTriple.
QuadraticMap map_from_triple(double x, double y, double z);

/// (x, p, r) chart of an ordered triple: p = y - x, r = (z - y) / (y - x).
struct TCoordinates {
  double x;
  double p;
  double r;
};

TCoordinates t_forward(double x, double y, double z);
std::array<double, 3> t_inverse(const TCoordinates& t);

struct StepAndBase {
  double p;
  double x;
};

/// p = -(r^2 + r + 1) / (a r (r + 1)),
/// x = -b / (2a) + (r^3 + 2r^2 + r + 1) / (2a r (r + 1)).
StepAndBase p_x_from_r(const QuadraticMap& m, double r);

/// Default for classify_branch_from_ratio.
constexpr double tol_degenerate_ratio() noexcept { return 1e-9; }

/// Branch of the cycle whose representative has ratio r, read from the sign
/// of h(r). |h(r)| <= tolerance is Degenerate.
Branch classify_branch_from_ratio(double r, double tolerance = tol_degenerate_ratio());

}  // namespace quadcycle
