#include "quadcycle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "quadcycle/error.hpp"
#include "quadcycle/tolerances.hpp"

namespace quadcycle::oracle {

namespace {

// |p(c)| below this fraction of touch_scale(p, c) at a critical point c
// counts as a repeated root.
constexpr double kTouchTolerance = 1e-12;

// Coefficient rounding follows the largest coefficient, so near x = 0 the
// plain sum |c_i||x|^i understates the error in p(x).
double touch_scale(const Polynomial& p, double x) {
  return p.max_abs_coeff() * std::pow(std::max(1.0, std::abs(x)), p.degree());
}

double cauchy_bound(const Polynomial& p) {
  const auto c = p.coefficients();
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::abs(c[i]) / lead);
  return 1.0 + m;
}

std::size_t nearest_unassigned(const std::vector<RealRoot>& roots, const std::vector<bool>& used,
                               double target) {
  std::size_t best = roots.size();
  double best_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    const double gap = std::abs(roots[i].value - target);
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  return best;
}

[[noreturn]] void grouping_failure(const QuadraticMap& m, double x) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "orbit of " << x << " does not close for a=" << m.a() << " b=" << m.b() << " c=" << m.c();
  throw Error(ErrorCode::OrbitGroupingFailure, msg.str());
}

}  // namespace

Polynomial compose3(const QuadraticMap& m) {
  const Polynomial g = m.as_polynomial();
  return compose(g, compose(g, g));
}

Polynomial period3_factor(const QuadraticMap& m) {
  const Polynomial num = compose3(m) - Polynomial{0.0, 1.0};
  const Polynomial den = m.as_polynomial() - Polynomial{0.0, 1.0};
  DivisionResult div = divide(num, den);
  const double limit = tol::coeff * num.max_abs_coeff();
  if (div.remainder.max_abs_coeff() > limit) {
    std::ostringstream msg;
    msg << "remainder " << div.remainder.max_abs_coeff() << " exceeds " << limit;
    throw Error(ErrorCode::DivisionResidual, msg.str());
  }
  return std::move(div.quotient);
}

std::vector<RealRoot> real_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "real_roots of the zero polynomial");
  if (p.degree() == 0) return {};
  if (p.degree() == 1) return {{-p[0] / p[1], 1}};

  const std::vector<RealRoot> critical = real_roots(p.derivative());
  const double bound = cauchy_bound(p);

  struct Node {
    double x;
    double value;
    int root_multiplicity;  // 0 when p(x) is not zero
  };
  std::vector<Node> nodes;
  nodes.reserve(critical.size() + 2);
  nodes.push_back({-bound, p(-bound), 0});
  for (const RealRoot& c : critical) {
    if (c.value <= -bound || c.value >= bound) continue;
    const double v = p(c.value);
    const bool touches = std::abs(v) <= kTouchTolerance * touch_scale(p, c.value);
    nodes.push_back({c.value, v, touches ? c.multiplicity + 1 : 0});
  }
  nodes.push_back({bound, p(bound), 0});

  std::vector<RealRoot> roots;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) {
      const Node& l = nodes[i - 1];
      const Node& r = nodes[i];
      if (l.root_multiplicity == 0 && r.root_multiplicity == 0 &&
          std::signbit(l.value) != std::signbit(r.value)) {
        roots.push_back({bracketed_root(p, l.x, r.x), 1});
      }
    }
    if (nodes[i].root_multiplicity > 0) roots.push_back({nodes[i].x, nodes[i].root_multiplicity});
  }
  return roots;
}

OracleResult find_cycles(const QuadraticMap& m) {
  // Work with the conjugate u -> u^2 + bu + ac, x = u / a. Cycle points of g
  // scale like 1/a, so this keeps the coefficients of the period-3 factor
  // balanced when |a| is small.
  const QuadraticMap monic(1.0, m.b(), m.a() * m.c());
  const std::vector<RealRoot> roots = real_roots(period3_factor(monic));
  std::vector<bool> used(roots.size(), false);
  const auto close_enough = [&monic](double from, double to) {
    return std::abs(monic(from) - to) <= tol::cycle() * std::max(1.0, monic.term_scale(from));
  };

  OracleResult result;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const double u = roots[i].value;

    const std::size_t j = nearest_unassigned(roots, used, monic(u));
    if (j == roots.size() || !close_enough(u, roots[j].value)) grouping_failure(m, u / m.a());
    used[j] = true;
    const double v = roots[j].value;

    const std::size_t k = nearest_unassigned(roots, used, monic(v));
    if (k == roots.size() || !close_enough(v, roots[k].value)) grouping_failure(m, u / m.a());
    used[k] = true;
    const double w = roots[k].value;
    if (!close_enough(w, u)) grouping_failure(m, u / m.a());

    std::array<double, 3> cycle{u / m.a(), v / m.a(), w / m.a()};
    const std::size_t first = static_cast<std::size_t>(
        std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(first), cycle.end());
    result.cycles.push_back(cycle);
    result.multipliers.push_back(monic.derivative(u) * monic.derivative(v) * monic.derivative(w));
    for (double x : cycle) result.residual = std::max(result.residual, std::abs(m(m(m(x))) - x));
  }
  return result;
}

}  // namespace quadcycle::oracle
