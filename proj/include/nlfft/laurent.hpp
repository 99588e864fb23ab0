#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nlfft/fft.hpp"

namespace nlfft {

using cd = std::complex<double>;

/// Finite Laurent polynomial p(z) = sum_j coeffs[j] * z^(low_deg + j),
/// stored densely. After construction the leading and trailing stored
/// coefficients are nonzero (exact-zero trimming only; numerically tiny
/// values are preserved so that degrees are never silently altered).
/// The canonical zero polynomial has empty coefficients and low_deg = 0.
/// Values are immutable after construction; every operation below is a
/// pure function and safe to call concurrently.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int low_deg, std::vector<cd> coeffs);

  static LaurentPoly constant(cd c);
  static LaurentPoly monomial(cd c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int low_deg() const { return low_deg_; }
  int high_deg() const { return low_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Number of stored coefficients (0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }
  std::span<const cd> coeffs() const { return coeffs_; }

  /// Coefficient of z^degree; zero outside the stored window.
  cd coeff(int degree) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  int low_deg_ = 0;
  std::vector<cd> coeffs_;
};

/// Conjugate-reflect: p*(z) = conj(p(1/conj(z))); c z^k maps to conj(c) z^-k.
LaurentPoly lp_star(const LaurentPoly& p);

/// Exact-degree product. Uses zero-padded FFT convolution when the result
/// holds at least config::kFftCrossover coefficients, schoolbook below.
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_scale(const LaurentPoly& p, cd factor);

/// Multiply by z^k.
LaurentPoly lp_shift(const LaurentPoly& p, int k);

/// Values p(e^(2*pi*i*j/m)) for j = 0..m-1. Power-of-two grids go through
/// the FFT of the folded coefficient vector; other sizes fall back to
/// direct evaluation.
std::vector<cd> lp_eval_circle(const LaurentPoly& p, std::size_t m,
                               fft::Exec exec = fft::Exec::automatic);

/// Evaluate at a single nonzero point.
cd lp_eval(const LaurentPoly& p, cd z);

/// max_j |p(e^(2*pi*i*j/m))|.
double lp_max_on_circle(const LaurentPoly& p, std::size_t m);

/// Sum of |c|^2 over stored coefficients (squared L2 norm on the circle).
double lp_norm2_sq(const LaurentPoly& p);

/// Largest |difference of coefficients| between p and q.
double lp_coeff_dist(const LaurentPoly& p, const LaurentPoly& q);

/// Plain coefficient convolution with the same FFT/schoolbook crossover
/// as lp_mul. Exposed for solvers that work on raw coefficient windows.
std::vector<cd> convolve(std::span<const cd> x, std::span<const cd> y,
                         fft::Exec exec = fft::Exec::automatic);

}  // namespace nlfft
