#pragma once

#include <cstddef>

// Central knobs for the numerical library. Values here are engineering
// choices, kept in one place so they can be audited and retuned.
namespace nlfft::config {

// Polynomial products switch from schoolbook to zero-padded FFT convolution
// once the result holds at least this many coefficients. Empirically tuned;
// correctness does not depend on it (both paths are exact up to rounding).
inline constexpr std::size_t kFftCrossover = 64;

// Minimum transform length before the FFT kernel considers fanning out to
// OpenMP threads. Below this the parallel-for overhead dominates.
inline constexpr std::size_t kFftParallelMin = std::size_t{1} << 14;

// Minimum number of sample points before grid evaluators parallelize.
inline constexpr std::size_t kGridParallelMin = 512;

// Default absolute tolerance on the coefficients of a*a + b*b - 1 when
// testing membership of a pair in the NLFT image set.
inline constexpr double kPairCheckTol = 1e-8;

// Grid refinement factor for estimating sup-norms on the unit circle:
// the default evaluation grid has this many points per stored coefficient.
inline constexpr int kEtaGridFactor = 16;

// Root pairing: candidates u, v are treated as a reflected pair when
// |u * conj(v) - 1| <= kRootPairTol.
inline constexpr double kRootPairTol = 1e-6;

// Roots with | |u| - 1 | <= kCircleSnapTol are snapped onto the unit circle.
inline constexpr double kCircleSnapTol = 1e-7;

// Two computed roots are clustered into one multiple root when their
// distance is below this (relative to max(1, |root|)).
inline constexpr double kRootClusterTol = 1e-6;

// Complement enumeration is exponential in the degree; hard cap.
inline constexpr int kEnumerateDegreeCap = 12;

// Dense diagnostics (Gram/triangular matrices) refuse sizes above this.
inline constexpr int kDenseCap = 2048;

// Classification margin for root moduli in outerness tests.
inline constexpr double kOuterMargin = 1e-9;

// Imaginary parts of recovered coefficients up to this magnitude are treated
// as rounding noise when a real sequence is required; larger ones are errors.
inline constexpr double kImagGate = 1e-9;

// Optional leaf size for the fast inverse solver: windows at or below this
// size are handled by the in-place rotation loop instead of recursing to
// size one. Must be output-equivalent; 0 disables the cutover.
inline constexpr int kDefaultInverseLeaf = 0;
inline constexpr int kTunedInverseLeaf = 32;

}  // namespace nlfft::config
