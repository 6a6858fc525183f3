#pragma once

namespace quadcycle::tol {

// Residual |p(root)| after Newton polishing, relative to sum |c_i||root|^i.
inline constexpr double resid = 1e-10;
inline constexpr double vieta = 1e-9;
// Relative, coefficient-wise.
inline constexpr double coeff = 1e-12;
// Distance from excluded points (poles, critical points, a = 0).
inline constexpr double domain = 1e-12;
// Cubic discriminant, relative to 4|p|^3 + 27q^2 of the depressed form.
inline constexpr double disc = 1e-12;
inline constexpr double sep = 1e-10;
inline constexpr double roundtrip = 1e-9;
inline constexpr double mult = 1e-8;
// | |H| - 1 | below this counts as nonhyperbolic.
inline constexpr double hyp = 1e-9;
inline constexpr double root = 1e-10;
// Relative factor of tol_degenerate = degenerate_rel * max(1, b^2, |4ac|).
inline constexpr double degenerate_rel = 1e-9;

/// Orbit closure tolerance, 1e-8 times the QUADCYCLE_TOL scale factor
/// (read once from the environment, default 1).
double cycle();

}  // namespace quadcycle::tol
