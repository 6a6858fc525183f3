#pragma once

#include <array>
#include <vector>

#include "quadcycle/cycle.hpp"
#include "quadcycle/polynomial.hpp"

// Brute-force path to the 3-cycles of a quadratic map: expand the third
// iterate, strip the fixed-point factor and find the real roots numerically.
// Nothing here touches the closed-form cycle formulas.
namespace quadcycle::oracle {

/// g(g(g(x))) as a degree-8 polynomial with leading coefficient a^7.
Polynomial compose3(const QuadraticMap& m);

/// (g^(3)(x) - x) / (g(x) - x). Throws DivisionResidual if the remainder is
/// not zero to tol::coeff relative to the dividend.
Polynomial period3_factor(const QuadraticMap& m);

struct RealRoot {
  double value;
  int multiplicity;
};

/// All real roots, ascending, with multiplicities.
///
/// Roots of p' (found recursively) split the real line into monotone pieces
/// bounded by the Cauchy bound; sign changes on each piece are refined by
/// bracketed Newton, and a critical point where p vanishes to rounding level
/// is reported as a repeated root. Throws InvalidArgument for the zero
/// polynomial.
std::vector<RealRoot> real_roots(const Polynomial& p);

struct OracleResult {
  std::vector<std::array<double, 3>> cycles;  // each in orbit order from its smallest point
  std::vector<double> multipliers;
  double residual = 0.0;  // max |g^(3)(x) - x| over reported points
};

/// Groups the real roots of period3_factor into orbits {x, g(x), g(g(x))}.
/// Throws OrbitGroupingFailure if an orbit does not close within tol::cycle().
OracleResult find_cycles(const QuadraticMap& m);

}  // namespace quadcycle::oracle
