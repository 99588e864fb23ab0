#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nlfft/config.hpp"
#include "nlfft/nlft.hpp"

namespace nlfft {

/// Elementary SU(2) rotation Theta(g) = (1+|g|^2)^(-1/2) [[1, -g], [conj(g), 1]].
struct GivensRotor {
  cd gamma;

  double scale() const;
  /// Right-multiply the 1x2 row (x, y) by the rotor.
  void apply(cd& x, cd& y) const;
};

/// Right-multiplies the (rows.size())x2 block (a_col, b_col) by Theta(g).
/// Preserves the Frobenius norm of the block.
void givens_apply(std::span<cd> a_col, std::span<cd> b_col, const GivensRotor& r);

/// Working state of the stripping iteration: coefficient windows of a_k^*
/// (ascending powers) and b_k. rotate() applies Theta(gamma_k) in place;
/// drop() then discards the leading entry of the b column and the trailing
/// entry of the a column, shrinking the window by one.
class StripState {
 public:
  StripState(std::vector<cd> a_star, std::vector<cd> b);

  std::size_t window() const { return a_len_; }
  int step() const { return step_; }
  std::span<const cd> a_col() const { return {a_.data(), a_len_}; }
  std::span<const cd> b_col() const { return {b_.data() + b_start_, a_len_}; }

  /// b_{0,k} / a_{0,k}; throws NumericalFailure when Re a_{0,k} <= 0.
  cd gamma() const;
  void rotate(cd gk);
  void drop();

  /// gamma(); rotate; drop. Returns the emitted coefficient.
  cd advance();

 private:
  std::vector<cd> a_;
  std::vector<cd> b_;
  std::size_t a_len_;
  std::size_t b_start_ = 0;
  int step_ = 0;
};

/// Sequential inverse transform of a pair in the image set; expects b
/// normalized to lowest degree zero (callers go through inverse_nlft for
/// the general case). O(n^2) time, in-place on two coefficient windows.
ComplexSequence layer_strip(const NlftPair& p, double tol = config::kPairCheckTol);

/// The same rotate-and-drop iteration applied to arbitrary coefficient
/// windows (no membership assumption; the trailing a-entry is discarded
/// even when nonzero). Requires Re a_star[0] > 0. This is the primitive
/// the fast solver calls on truncated windows.
std::vector<cd> layer_strip_general(std::vector<cd> a_star, std::vector<cd> b,
                                    std::size_t steps);

struct InverseFftResult {
  std::vector<cd> gamma;
  TransferPair transfer;  // (xi_n, eta_n) of the emitted sequence
};

struct InverseFftOptions {
  /// Windows at or below this size are handled by the rotation loop instead
  /// of recursing to size one; 0 keeps the pure recursion. Either setting
  /// produces the same output up to rounding.
  int leaf_size = config::kDefaultInverseLeaf;
};

/// Divide-and-conquer inverse transform on raw coefficient windows,
/// O(n log^2 n) via FFT polynomial products. Inputs are the first n
/// coefficients of a_0^*(z) and b_0(z); both vectors must have equal
/// length. Vectors are zero-padded to a power of two internally and the
/// padding is stripped from the returned sequence.
InverseFftResult inlfft(std::vector<cd> a_star, std::vector<cd> b,
                        const InverseFftOptions& opts = {});

enum class InverseMethod { layer, fast };

/// Inverse transform of a pair in the image set: validates membership,
/// normalizes b to lowest degree zero, dispatches, and reattaches the
/// support offset. Empty-support input (b = 0) yields the empty sequence.
ComplexSequence inverse_nlft(const NlftPair& p, InverseMethod method,
                             double tol = config::kPairCheckTol,
                             const InverseFftOptions& opts = {});

/// Hook for diagnostics: called after each rotation with the step index,
/// the emitted coefficient, and the rotated (not yet dropped) columns.
using StripObserver =
    std::function<void(int step, cd gk, std::span<const cd> a_col, std::span<const cd> b_col)>;

/// layer_strip with an observer; used to assemble the triangular factors.
ComplexSequence layer_strip_observed(const NlftPair& p, const StripObserver& observe,
                                     double tol = config::kPairCheckTol);

}  // namespace nlfft
