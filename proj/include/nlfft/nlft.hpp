#pragma once

#include <span>
#include <string>
#include <vector>

#include "nlfft/config.hpp"
#include "nlfft/laurent.hpp"

namespace nlfft {

/// Compactly supported sequence of complex coefficients; values[j] sits at
/// integer index support_offset + j. With strict = true the first and last
/// stored values must be nonzero (the convention tying the support interval
/// to the degree window of the transform); the relaxed variant admits zero
/// endpoints, which the generalized stripping iteration needs.
struct ComplexSequence {
  std::vector<cd> values;
  int support_offset = 0;
  bool strict = false;

  ComplexSequence() = default;
  ComplexSequence(std::vector<cd> vals, int offset, bool strict_support = false);

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
};

/// Transfer-matrix pair (a, b): the matrix [[a, b], [-b*, a*]] with
/// a a* + b b* = 1 and a*(0) > 0 for members of the transform image.
struct NlftPair {
  LaurentPoly a;
  LaurentPoly b;
};

/// Polynomial pair (xi, eta) encoding the partial product of `length`
/// consecutive factors, re-based to start at index zero: the product equals
/// [[eta*, xi], [-xi*, eta]]. The sharp forms z^length * (.)* clear negative
/// powers so products become plain coefficient convolutions.
struct TransferPair {
  LaurentPoly xi;
  LaurentPoly eta;
  int length = 0;

  LaurentPoly xi_sharp() const { return lp_shift(lp_star(xi), length); }
  LaurentPoly eta_sharp() const { return lp_shift(lp_star(eta), length); }
};

/// Report from membership testing of a candidate pair.
struct PairReport {
  double residual = 0.0;      // max |coeff of (aa* + bb* - 1)|
  double a0_imag = 0.0;       // |Im a*(0)|
  double a0 = 0.0;            // Re a*(0)
  bool a0_positive = false;
  bool degrees_ok = false;
  bool pass = false;
  double tol = config::kPairCheckTol;
  std::string detail;
};

/// Left-to-right product of the elementary factors; O(n^2) total work.
/// Retained as the oracle for the divide-and-conquer path.
NlftPair forward_nlft_naive(const ComplexSequence& g);

/// Product-tree forward transform, O(n log^2 n) via FFT products.
NlftPair forward_nlft_fast(const ComplexSequence& g);

/// Transfer pair of a zero-based coefficient window (the building block of
/// the fast forward path, also used to combine with inverse-solver output).
TransferPair transfer_of(std::span<const cd> window);

/// Combine transfers of adjacent windows: left covers indices
/// [0, left.length), right the next right.length indices.
TransferPair transfer_combine(const TransferPair& left, const TransferPair& right);

/// Membership test for the transform image: residual of aa* + bb* - 1,
/// sign/reality of a*(0), degree-window conformance.
PairReport pair_check(const NlftPair& p, double tol = config::kPairCheckTol);

/// Grid estimate of the margin 1 - max |b| on the unit circle. 1 when b = 0.
/// grid = 0 selects config::kEtaGridFactor points per coefficient, rounded
/// up to a power of two.
double eta_of(const NlftPair& p, std::size_t grid = 0);

/// (a, z^k b): shifts the support of the underlying sequence by k.
NlftPair shift_support(const NlftPair& p, int k);

}  // namespace nlfft
