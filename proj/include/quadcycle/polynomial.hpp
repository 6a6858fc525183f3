#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace quadcycle {

/// Real polynomial with coefficients in ascending degree order.
///
/// Trailing zero coefficients are dropped on construction, so the leading
/// coefficient is nonzero unless the polynomial is identically zero (in which
/// case the coefficient list is empty and degree() is -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  static Polynomial monomial(int degree, double coeff = 1.0);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const double> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of x^i; zero past the degree.
  double operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0.0;
  }
  double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double operator()(double x) const noexcept;

  Polynomial derivative() const;

  /// Largest |c_i|; zero for the zero polynomial.
  double max_abs_coeff() const noexcept;

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(double s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// Horner evaluation.
double eval(const Polynomial& p, double x) noexcept;

/// sum |c_i| |x|^i, the natural magnitude against which p(x) is compared.
double abs_scale(const Polynomial& p, double x) noexcept;

/// outer(inner(x)), by Horner's rule over polynomials.
Polynomial compose(const Polynomial& outer, const Polynomial& inner);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division num = quotient * den + remainder, deg(remainder) < deg(den).
/// Each coefficient is accumulated with compensated summation.
DivisionResult divide(const Polynomial& num, const Polynomial& den);

/// Largest coefficient-wise gap |lhs_i - rhs_i| divided by max(1, largest |coefficient|).
double relative_coeff_distance(const Polynomial& lhs, const Polynomial& rhs);

/// Root of p in [lo, hi] given a sign change, by Newton steps safeguarded with
/// bisection. Converges to the limit of double resolution.
double bracketed_root(const Polynomial& p, double lo, double hi);

/// Ordered triple of real roots, smallest first.
struct RealCubicRoots {
  double q1;
  double q2;
  double q3;

  std::array<double, 3> as_array() const noexcept { return {q1, q2, q3}; }
};

/// Q_beta(X) = X^3 + (1 - beta) X^2 - (2 + beta) X - 1.
Polynomial q_beta(double beta);

/// P_alpha(X) = X^6 + 2X^5 - (alpha+3)X^4 - 2(alpha+3)X^3 + (2-alpha)X^2 + 4X + 1,
/// which equals Q_0(X)^2 - alpha X^2 (X+1)^2.
Polynomial p_alpha(double alpha);

/// General real cubic with three real roots (counted with multiplicity).
///
/// Uses the trigonometric form when the discriminant is clearly positive and a
/// Newton-polished real root plus quadratic deflation near a repeated root.
/// Throws NotCubic when degree != 3 and ComplexRoots when the discriminant is
/// below -tol::disc relative to the depressed-cubic magnitude.
RealCubicRoots solve_cubic_real(const Polynomial& p);

/// Roots of Q_beta; always real and separated as q1 < -1 < q2 < 0 < q3.
RealCubicRoots solve_q_beta(double beta);

/// h(r) = Q_0(r) / (r (r + 1)). Q_beta(r) = 0 exactly when h(r) = beta.
/// Throws PoleAtExcludedPoint when r is within tol::domain of 0 or -1.
double h_ratio(double r);

/// Roots of Q_0, computed once.
const RealCubicRoots& q0_roots();

}  // namespace quadcycle
