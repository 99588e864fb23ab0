#pragma once

#include <cstdint>
#include <random>

#include "nlfft/nlft.hpp"
#include "nlfft/qsp.hpp"

namespace nlfft {

/// Seeded generators for admissible instances used by benchmarks and
/// verification drivers. All randomness flows through one PRNG per call.

/// Sequence of n i.i.d. coefficients, uniform on the complex disk of the
/// given radius (first/last entry redrawn until nonzero).
ComplexSequence random_sequence(int n, double radius, std::uint64_t seed);

/// Sequence scaled so that the circle-grid sup of the transformed b lands
/// near 1 - eta (within about 0.01 for reachable targets). The transform
/// of the result is admissible input for the inverse solvers when its a*
/// stays zero-free on the closed disk.
ComplexSequence random_sequence_with_eta(int n, double eta, std::uint64_t seed);

/// Random real target with definite parity, degree exactly n, scaled so
/// the Chebyshev-grid sup-norm equals max_abs.
QspTarget random_qsp_target(int n, double max_abs, std::uint64_t seed);

/// Random complex target of degree n scaled to circle-grid sup max_abs.
GqspTarget random_gqsp_target(int n, double max_abs, std::uint64_t seed);

/// Random real polynomial of degree n-1 with circle-grid sup max_abs.
LaurentPoly random_real_b(int n, double max_abs, std::uint64_t seed);

}  // namespace nlfft
