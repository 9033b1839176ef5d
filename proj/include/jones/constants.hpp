#pragma once

// Shared numerical tolerances. Tests and implementation read the same values.

namespace jones {

/// Relative tolerance for identities that hold exactly in real arithmetic.
inline constexpr double REL_TOL = 1e-9;

/// Tolerance for line-distance searches and gap comparisons.
inline constexpr double LINE_TOL = 1e-10;

/// Absolute accuracy promised for beta numbers.
inline constexpr double ABS_TOL = 1e-8;

/// Parameter tolerance for convex bisection on polyline segments.
inline constexpr double PARAM_TOL = 1e-12;

/// Beta values below this are treated as zero (straight configurations).
inline constexpr double BETA_ZERO_TOL = 1e-12;

}  // namespace jones
