#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nlfft/nlft.hpp"

namespace nlfft {

/// Phase factors for the signal-processing protocols. psi holds n+1 angles
/// for a degree-n target; phi is present only for the two-parameter
/// (generalized) protocol. Solvers fill `residual` with the verification
/// error of the returned phases against the target on a dense grid.
struct PhaseFactorSet {
  enum class Kind { qsp, gqsp };
  Kind kind = Kind::qsp;
  std::vector<double> psi;
  std::vector<double> phi;  // empty for kind == qsp
  double residual = 0.0;
};

/// Real target with definite parity, stored as Chebyshev coefficients
/// f = sum_k coeffs[k] T_k. Entries whose index parity disagrees with the
/// degree must vanish.
struct QspTarget {
  std::vector<double> cheb;

  int degree() const;
};

/// Complex target on the unit circle, stored as monomial coefficients
/// Q(z) = sum_k coeffs[k] z^k.
struct GqspTarget {
  std::vector<cd> coeffs;

  int degree() const;
};

/// The real-coefficient polynomial b of degree n (in z = e^{2 i theta})
/// whose rotated real part reproduces f: Re[b(e^{2 i theta}) e^{-i n theta}]
/// = f(cos theta). Chebyshev term c_k T_k contributes c_k/2 at degrees
/// (n+k)/2 and (n-k)/2.
LaurentPoly chebyshev_to_b(const QspTarget& f, int n);

/// psi_k = arctan(gamma_k) for a real sequence (imaginary parts above the
/// gate are rejected, below it truncated).
PhaseFactorSet qsp_phases_from_gamma(const ComplexSequence& g);

/// psi_k = arctan|gamma_k| >= 0, phi_k = Arg(gamma_k) with Arg(0) := 0.
PhaseFactorSet gqsp_phases_from_gamma(const ComplexSequence& g);

struct QspSignalValues {
  std::vector<cd> u;  // top-left entries
  std::vector<cd> v;  // companion: top-right entry is i*v
};

/// Evaluate the signal-processing product e^{i psi_0 Z} prod W(x) e^{i psi_k Z}
/// at each sample x in [-1, 1].
QspSignalValues qsp_evaluate(const PhaseFactorSet& phases, std::span<const double> xs);

/// Evaluate the generalized product R(psi_0, phi_0) prod diag(z,1) R(psi_k, phi_k)
/// at unit-modulus samples and return the entry carrying the target
/// (upper-right by default; `target_upper_left` post-multiplies the
/// constant SU(2) rotation that moves it to the upper-left corner).
std::vector<cd> gqsp_evaluate(const PhaseFactorSet& phases, std::span<const cd> zs,
                              bool target_upper_left = false);

/// Chebyshev-grid sup-norm margin of the target: 1 - max |f|.
double qsp_target_margin(const QspTarget& f);
/// Circle-grid margin 1 - max |Q|.
double gqsp_target_margin(const GqspTarget& q);

/// Full pipeline: target -> b -> outer complement -> fast inverse transform
/// -> phases, verified on a 1024-point grid (residual stored in the result).
PhaseFactorSet solve_qsp(const QspTarget& f);
PhaseFactorSet solve_gqsp(const GqspTarget& q);

/// Clenshaw evaluation of a Chebyshev expansion at x in [-1, 1].
double chebyshev_eval(std::span<const double> cheb, double x);

}  // namespace nlfft
