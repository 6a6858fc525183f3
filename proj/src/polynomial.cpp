#include "quadcycle/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "quadcycle/error.hpp"
#include "quadcycle/tolerances.hpp"

namespace quadcycle {

namespace {

// Neumaier summation; products enter through add_product so that the rounding
// error of each product is carried as well.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  void add_product(double a, double b) noexcept {
    const double p = a * b;
    add(p);
    add(std::fma(a, b, -p));
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// A few Newton steps, accepted only while the residual strictly drops.
double newton_polish(const Polynomial& p, const Polynomial& dp, double x) {
  double fx = std::abs(p(x));
  for (int i = 0; i < 8 && fx > 0.0; ++i) {
    const double d = dp(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    const double nx = x - p(x) / d;
    const double fn = std::abs(p(nx));
    if (!(fn < fx)) break;
    x = nx;
    fx = fn;
  }
  return x;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::monomial(int degree, double coeff) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative monomial degree");
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<double> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs[i] + rhs[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<double> c(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs[i] - rhs[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const std::size_t n = lhs.coeffs_.size() + rhs.coeffs_.size() - 1;
  std::vector<double> c(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    CompensatedSum acc;
    const std::size_t lo = k >= rhs.coeffs_.size() ? k - rhs.coeffs_.size() + 1 : 0;
    const std::size_t hi = std::min(k, lhs.coeffs_.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i) acc.add_product(lhs.coeffs_[i], rhs.coeffs_[k - i]);
    c[k] = acc.value();
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p) {
  std::vector<double> c(p.coeffs_);
  for (double& v : c) v *= s;
  return Polynomial(std::move(c));
}

double eval(const Polynomial& p, double x) noexcept { return p(x); }

double abs_scale(const Polynomial& p, double x) noexcept {
  const auto c = p.coefficients();
  const double ax = std::abs(x);
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
  Polynomial acc;
  const auto c = outer.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Polynomial{*it};
  return acc;
}

DivisionResult divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  const int n = num.degree();
  const int m = den.degree();
  if (n < m) return {Polynomial{}, num};

  std::vector<double> q(static_cast<std::size_t>(n - m) + 1, 0.0);
  for (int k = n - m; k >= 0; --k) {
    CompensatedSum acc;
    acc.add(num[static_cast<std::size_t>(k + m)]);
    for (int j = k + 1; j <= std::min(n - m, k + m); ++j) {
      acc.add_product(-q[static_cast<std::size_t>(j)], den[static_cast<std::size_t>(k + m - j)]);
    }
    q[static_cast<std::size_t>(k)] = acc.value() / den.leading();
  }

  std::vector<double> r(static_cast<std::size_t>(std::max(m, 0)), 0.0);
  for (int i = 0; i < m; ++i) {
    CompensatedSum acc;
    acc.add(num[static_cast<std::size_t>(i)]);
    for (int j = std::max(0, i - m); j <= std::min(i, n - m); ++j) {
      acc.add_product(-q[static_cast<std::size_t>(j)], den[static_cast<std::size_t>(i - j)]);
    }
    r[static_cast<std::size_t>(i)] = acc.value();
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

double relative_coeff_distance(const Polynomial& lhs, const Polynomial& rhs) {
  const std::size_t n = std::max(lhs.coefficients().size(), rhs.coefficients().size());
  double gap = 0.0;
  for (std::size_t i = 0; i < n; ++i) gap = std::max(gap, std::abs(lhs[i] - rhs[i]));
  return gap / std::max({1.0, lhs.max_abs_coeff(), rhs.max_abs_coeff()});
}

double bracketed_root(const Polynomial& p, double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  double flo = p(lo);
  const double fhi = p(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw Error(ErrorCode::InvalidArgument, "bracketed_root needs a sign change");
  }
  const Polynomial dp = p.derivative();
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 2000; ++it) {
    const double fx = p(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      return std::abs(p(lo)) <= std::abs(p(hi)) ? lo : hi;
    }
    const double d = dp(x);
    double next = d != 0.0 ? x - fx / d : mid;
    if (!(next > lo && next < hi)) next = mid;
    if (next == x) return x;
    x = next;
  }
  return x;
}

Polynomial q_beta(double beta) { return Polynomial{-1.0, -(2.0 + beta), 1.0 - beta, 1.0}; }

Polynomial p_alpha(double alpha) {
  return Polynomial{1.0, 4.0, 2.0 - alpha, -2.0 * (alpha + 3.0), -(alpha + 3.0), 2.0, 1.0};
}

RealCubicRoots solve_cubic_real(const Polynomial& p) {
  if (p.degree() != 3) throw Error(ErrorCode::NotCubic, "expected degree 3, got " + std::to_string(p.degree()));

  const double lead = p.leading();
  const double A = p[2] / lead;
  const double B = p[1] / lead;
  const double C = p[0] / lead;

  // x = t - A/3 gives t^3 + dp t + dq.
  const double shift = A / 3.0;
  const double dp = B - A * A / 3.0;
  const double dq = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
  const double disc = -4.0 * dp * dp * dp - 27.0 * dq * dq;
  const double scale = 4.0 * std::abs(dp * dp * dp) + 27.0 * dq * dq;
  const double disc_tol = tol::disc * scale;

  if (disc < -disc_tol) {
    throw Error(ErrorCode::ComplexRoots, "cubic discriminant is negative");
  }

  std::array<double, 3> t{};
  if (scale == 0.0) {
    t = {0.0, 0.0, 0.0};
  } else if (disc > disc_tol) {
    const double m = 2.0 * std::sqrt(-dp / 3.0);
    const double arg = std::clamp(3.0 * dq / (dp * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    constexpr double two_pi_3 = 2.0 * std::numbers::pi / 3.0;
    for (int k = 0; k < 3; ++k) t[static_cast<std::size_t>(k)] = m * std::cos(theta - two_pi_3 * k);
  } else {
    // Repeated root: real Cardano root, then deflate to a quadratic.
    const Polynomial depressed{dq, dp, 0.0, 1.0};
    const double half_q = -0.5 * dq;
    const double d = std::max(0.0, dq * dq / 4.0 + dp * dp * dp / 27.0);
    double t0 = std::cbrt(half_q + std::sqrt(d)) + std::cbrt(half_q - std::sqrt(d));
    t0 = newton_polish(depressed, depressed.derivative(), t0);
    // t^3 + dp t + dq = (t - t0)(t^2 + t0 t + (dp + t0^2))
    const double qb = t0;
    const double qc = dp + t0 * t0;
    const double qd = std::max(0.0, qb * qb - 4.0 * qc);
    const double sq = std::sqrt(qd);
    t = {t0, 0.5 * (-qb - sq), 0.5 * (-qb + sq)};
  }

  const Polynomial dpoly = p.derivative();
  std::array<double, 3> roots{};
  for (std::size_t k = 0; k < 3; ++k) roots[k] = newton_polish(p, dpoly, t[k] - shift);
  std::sort(roots.begin(), roots.end());
  return {roots[0], roots[1], roots[2]};
}

RealCubicRoots solve_q_beta(double beta) {
  const Polynomial q = q_beta(beta);
  RealCubicRoots r = solve_cubic_real(q);

  // Q(-1) = 1 and Q(0) = -1 bracket the middle root; the outer two lie within
  // the Cauchy bound.
  const double bound = 1.0 + std::max({std::abs(1.0 - beta), std::abs(2.0 + beta), 1.0});
  const auto settle = [&q](double guess, double lo, double hi) {
    if (guess > lo && guess < hi) {
      const double step = std::max(std::abs(guess), 1.0) * 1e-12;
      const double a = std::max(lo, guess - step);
      const double b = std::min(hi, guess + step);
      if (std::signbit(q(a)) != std::signbit(q(b))) return bracketed_root(q, a, b);
    }
    return bracketed_root(q, lo, hi);
  };
  r.q1 = settle(r.q1, -bound, -1.0);
  r.q2 = settle(r.q2, -1.0, 0.0);
  r.q3 = settle(r.q3, 0.0, bound);
  return r;
}

double h_ratio(double r) {
  if (std::abs(r) <= tol::domain || std::abs(r + 1.0) <= tol::domain) {
    throw Error(ErrorCode::PoleAtExcludedPoint, "h is undefined at r = 0 and r = -1");
  }
  return q_beta(0.0)(r) / (r * (r + 1.0));
}

const RealCubicRoots& q0_roots() {
  static const RealCubicRoots roots = solve_q_beta(0.0);
  return roots;
}

}  // namespace quadcycle
