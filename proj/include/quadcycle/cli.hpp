#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "quadcycle/classical.hpp"

namespace quadcycle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Fixed header of the sweep CSV.
inline constexpr std::string_view kSweepHeader =
    "param,delta,existence,multiplier_plus,multiplier_minus,verdict_plus,verdict_minus,"
    "x1_plus,x2_plus,x3_plus,x1_minus,x2_minus,x3_minus";

/// Writes the header and one row per grid point param = from + i * step,
/// i = 0, 1, ... while param <= to. Returns the number of rows.
std::size_t write_sweep(Family family, double from, double to, double step, std::ostream& out);

/// Entry point behind the quadcycle executable. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadcycle::cli
