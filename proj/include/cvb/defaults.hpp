#pragma once

namespace cvb::defaults {

// Sampling grid for convexity certification and hypothesis checks.
inline constexpr int kGrid = 257;

// Base certification tolerance; scaled internally by (1 + max |g|) over the grid.
inline constexpr double kCertifyTol = 1e-9;

// Quadrature tolerances: finite intervals and the half line.
inline constexpr double kFiniteTol = 1e-10;
inline constexpr double kHalfLineTol = 1e-8;

// Series truncation target.
inline constexpr double kSeriesTol = 1e-12;

// Default tolerance for pass/fail verdicts in reports (CLI --tol).
inline constexpr double kCheckTol = 1e-8;

}  // namespace cvb::defaults
