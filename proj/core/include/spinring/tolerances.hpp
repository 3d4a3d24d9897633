#pragma once

#include <cstddef>

namespace spinring {

/// Numerical thresholds shared by every module.
namespace tol {

inline constexpr double kAlgebra = 1e-12;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kNorm = 1e-12;
inline constexpr double kUnitary = 1e-12;

// Matrix elements at or below this magnitude are treated as structural zeros
// when building the coupling graph for sector detection.
inline constexpr double kSectorEdge = 1e-14;

// Degeneracy tolerance is this factor times max(1, ||H||_max).
inline constexpr double kDegeneracyRelative = 1e-9;

// Residual check for eigenpairs: ||Hv - Ev|| < kResidualRelative * ||H||.
inline constexpr double kResidualRelative = 1e-9;

// Negative residual tangles down to this value are rounding and clip to zero.
inline constexpr double kTangleClip = 1e-10;

// Negative eigenvalues of PSD intermediates above -kEigenClamp clamp to zero.
inline constexpr double kEigenClamp = 1e-12;

}  // namespace tol

/// Dense storage caps the ring at 12 spins (dimension 4096 for s = 1/2).
inline constexpr int kMaxSites = 12;

}  // namespace spinring
