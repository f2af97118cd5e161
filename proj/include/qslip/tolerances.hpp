#pragma once

#include <cstddef>

// Absolute tolerances shared across the library.
namespace qslip::tol {

inline constexpr double kHermitianFlag = 1e-12;   // Hermitian-flagged matrices
inline constexpr double kHermitianInput = 1e-10;  // eigensolver input check
inline constexpr double kSymmetricFlag = 1e-14;   // symmetric RealMatrix3

inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

inline constexpr double kTaylorTerm = 1e-18;

inline constexpr double kBlochState = 1e-12;     // |r| <= 1 + kBlochState
inline constexpr double kTrace = 1e-10;          // trace-one check on inputs
inline constexpr double kStateEigenvalue = 1e-10;  // min eigenvalue of a state
inline constexpr double kCompletePositivity = 1e-10;
inline constexpr double kWoottersClamp = 1e-10;

inline constexpr double kEndpointBisection = 1e-9;
inline constexpr double kKillsThreshold = 1e-12;

}  // namespace qslip::tol
