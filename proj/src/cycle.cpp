#include "quadcycle/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quadcycle/error.hpp"
#include "quadcycle/tolerances.hpp"

namespace quadcycle {

namespace {

double beta_for(const PerturbedDiscriminant& d, Branch branch) {
  switch (branch) {
    case Branch::PlusDelta: return std::sqrt(std::max(d.value, 0.0));
    case Branch::MinusDelta: return -std::sqrt(std::max(d.value, 0.0));
    case Branch::Degenerate: return 0.0;
  }
  return 0.0;
}

void require_distinct(double x, double y, double z) {
  if (std::abs(x - y) <= tol::sep || std::abs(y - z) <= tol::sep || std::abs(x - z) <= tol::sep) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "points must be pairwise distinct: (" << x << ", " << y << ", " << z << ")";
    throw Error(ErrorCode::DegenerateTriple, msg.str());
  }
}

void validate_cycle(const QuadraticMap& m, const ThreeCycle& cyc) {
  const auto& pts = cyc.points;
  if (!std::all_of(pts.begin(), pts.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::CycleValidation, "non-finite cycle point");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (std::abs(pts[i] - pts[j]) <= tol::sep) {
        throw Error(ErrorCode::CycleValidation, "cycle points are not distinct");
      }
    }
    const double next = pts[(i + 1) % 3];
    const double gap = std::abs(m(pts[i]) - next);
    if (gap > tol::cycle() * std::max(1.0, m.term_scale(pts[i]))) {
      std::ostringstream msg;
      msg.precision(3);
      msg << "orbit does not close, |g(x) - next| = " << gap;
      throw Error(ErrorCode::CycleValidation, msg.str());
    }
  }
}

}  // namespace

QuadraticMap::QuadraticMap(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorCode::InvalidMap, "coefficients must be finite");
  }
  if (std::abs(a) <= tol::domain) throw Error(ErrorCode::InvalidMap, "a must be nonzero");
}

double QuadraticMap::term_scale(double x) const noexcept {
  return std::abs(a_) * x * x + std::abs(b_ * x) + std::abs(c_);
}

bool PerturbedDiscriminant::is_degenerate() const noexcept { return std::abs(value) <= tolerance; }

double degenerate_tolerance(const QuadraticMap& m) {
  return tol::degenerate_rel * std::max({1.0, m.b() * m.b(), std::abs(4.0 * m.a() * m.c())});
}

PerturbedDiscriminant perturbed_discriminant(const QuadraticMap& m) {
  const double b = m.b();
  return {b * b - 4.0 * m.a() * m.c() - 2.0 * b - 7.0, degenerate_tolerance(m)};
}

std::string_view to_string(ExistenceClass e) noexcept {
  switch (e) {
    case ExistenceClass::NoCycles: return "NoCycles";
    case ExistenceClass::UniqueCycle: return "UniqueCycle";
    case ExistenceClass::TwoCycles: return "TwoCycles";
  }
  return "?";
}

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::PlusDelta: return "PlusDelta";
    case Branch::MinusDelta: return "MinusDelta";
    case Branch::Degenerate: return "Degenerate";
  }
  return "?";
}

ExistenceClass classify_existence(const PerturbedDiscriminant& delta) noexcept {
  if (delta.is_degenerate()) return ExistenceClass::UniqueCycle;
  return delta.value < 0.0 ? ExistenceClass::NoCycles : ExistenceClass::TwoCycles;
}

ExistenceClass classify_existence(const QuadraticMap& m) {
  return classify_existence(perturbed_discriminant(m));
}

int cycle_count(ExistenceClass e) noexcept {
  switch (e) {
    case ExistenceClass::NoCycles: return 0;
    case ExistenceClass::UniqueCycle: return 1;
    case ExistenceClass::TwoCycles: return 2;
  }
  return 0;
}

std::vector<Branch> branches_for(const QuadraticMap& m) {
  switch (classify_existence(m)) {
    case ExistenceClass::NoCycles: return {};
    case ExistenceClass::UniqueCycle: return {Branch::Degenerate};
    case ExistenceClass::TwoCycles: return {Branch::PlusDelta, Branch::MinusDelta};
  }
  return {};
}

ThreeCycle cycle_points(const QuadraticMap& m, Branch branch) {
  const PerturbedDiscriminant d = perturbed_discriminant(m);
  if (d.is_negative()) throw Error(ErrorCode::NoCycleExists, "delta < 0, the map has no 3-cycles");
  if ((branch == Branch::Degenerate) != d.is_degenerate()) {
    throw Error(ErrorCode::BranchMismatch,
                std::string(to_string(branch)) + " does not match delta = " + std::to_string(d.value));
  }

  const double beta = beta_for(d, branch);
  const RealCubicRoots q = solve_q_beta(beta);
  const double offset = (-m.b() + beta + 1.0) / (2.0 * m.a());
  ThreeCycle cyc{branch,
                 {offset + 1.0 / (m.a() * q.q1), offset + 1.0 / (m.a() * q.q2),
                  offset + 1.0 / (m.a() * q.q3)}};
  validate_cycle(m, cyc);
  return cyc;
}

CyclePolynomial cycle_polynomial(const QuadraticMap& m, Branch branch) {
  const PerturbedDiscriminant d = perturbed_discriminant(m);
  if (d.is_negative()) throw Error(ErrorCode::NoCycleExists, "delta < 0, the map has no 3-cycles");

  const double delta = d.effective();
  const double s = std::sqrt(std::max(delta, 0.0));
  const double sign = branch == Branch::MinusDelta ? -1.0 : 1.0;
  const double a = m.a();
  const double b = m.b();
  return {
      (3.0 * b + 1.0 - sign * s) / (2.0 * a),
      (3.0 * b * b + 2.0 * b - 9.0 - delta - sign * 2.0 * (b + 1.0) * s) / (4.0 * a * a),
      (sign * s * s * s + (1.0 - b) * delta - sign * (b * b + 2.0 * b - 7.0) * s + b * b * b +
       b * b - 9.0 * b - 1.0) /
          (8.0 * a * a * a),
  };
}

QuadraticMap map_from_triple(double x, double y, double z) {
  require_distinct(x, y, z);
  const double den = (y - z) * (x - z) * (x - y);
  const double a = x * x + y * y + z * z - x * y - x * z - y * z;
  const double b = -(x * x * x + y * y * y + z * z * z - x * x * z - x * y * y - y * z * z);
  const double c = x * x * x * y + x * z * z * z + y * y * y * z - y * y * z * z - x * x * y * y -
                   x * x * z * z;
  return {a / den, b / den, c / den};
}

TCoordinates t_forward(double x, double y, double z) {
  require_distinct(x, y, z);
  return {x, y - x, (z - y) / (y - x)};
}

std::array<double, 3> t_inverse(const TCoordinates& t) {
  if (t.p == 0.0 || t.r == 0.0 || t.r == -1.0 || !std::isfinite(t.x) || !std::isfinite(t.p) ||
      !std::isfinite(t.r)) {
    throw Error(ErrorCode::DegenerateTriple, "T-coordinates need p != 0 and r not in {0, -1}");
  }
  const double y = t.x + t.p;
  return {t.x, y, y + t.p * t.r};
}

StepAndBase p_x_from_r(const QuadraticMap& m, double r) {
  if (std::abs(r) <= tol::domain || std::abs(r + 1.0) <= tol::domain) {
    throw Error(ErrorCode::PoleAtExcludedPoint, "r must avoid 0 and -1");
  }
  const double a = m.a();
  const double rr1 = r * (r + 1.0);
  return {
      -(r * r + r + 1.0) / (a * rr1),
      -m.b() / (2.0 * a) + (((r + 2.0) * r + 1.0) * r + 1.0) / (2.0 * a * rr1),
  };
}

Branch classify_branch_from_ratio(double r, double tolerance) {
  const double h = h_ratio(r);
  if (std::abs(h) <= tolerance) return Branch::Degenerate;
  return h > 0.0 ? Branch::PlusDelta : Branch::MinusDelta;
}

}  // namespace quadcycle
