#pragma once

// Test-only reference routines. They share no code with the library's root
// finders or closed forms.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace quadcycle::testing {

/// Roots of f on [lo, hi] by a uniform sign-change scan and plain bisection.
inline std::vector<double> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                                      int cells = 200000) {
  std::vector<double> roots;
  const double h = (hi - lo) / cells;
  double x0 = lo;
  double f0 = f(x0);
  for (int i = 1; i <= cells; ++i) {
    const double x1 = lo + h * i;
    const double f1 = f(x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
      double a = x0, b = x1, fa = f0;
      for (int k = 0; k < 200; ++k) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

/// Solves the 3x3 system g(x) = y, g(y) = z, g(z) = x for (a, b, c) by Cramer's rule.
inline std::array<double, 3> solve_map_linear(double x, double y, double z) {
  const std::array<std::array<double, 3>, 3> m{{{x * x, x, 1.0}, {y * y, y, 1.0}, {z * z, z, 1.0}}};
  const std::array<double, 3> rhs{y, z, x};
  const auto det = [](const std::array<std::array<double, 3>, 3>& k) {
    return k[0][0] * (k[1][1] * k[2][2] - k[1][2] * k[2][1]) - k[0][1] * (k[1][0] * k[2][2] - k[1][2] * k[2][0]) +
           k[0][2] * (k[1][0] * k[2][1] - k[1][1] * k[2][0]);
  };
  const double d = det(m);
  std::array<double, 3> out{};
  for (std::size_t col = 0; col < 3; ++col) {
    auto k = m;
    for (std::size_t row = 0; row < 3; ++row) k[row][col] = rhs[row];
    out[col] = det(k) / d;
  }
  return out;
}

inline std::array<double, 3> sorted(std::array<double, 3> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline double set_distance(const std::array<double, 3>& lhs, const std::array<double, 3>& rhs) {
  const auto l = sorted(lhs);
  const auto r = sorted(rhs);
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) d = std::max(d, std::abs(l[i] - r[i]));
  return d;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Nonzero a in [-5, 5] with |a| >= 0.1.
inline double random_a(std::mt19937_64& rng) {
  double a = 0.0;
  do {
    a = uniform(rng, -5.0, 5.0);
  } while (std::abs(a) < 0.1);
  return a;
}

}  // namespace quadcycle::testing
