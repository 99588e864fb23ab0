#pragma once

#include <complex>
#include <vector>

namespace nlfft {

/// All complex roots of sum_k coeffs[k] z^k (ascending order, degree =
/// coeffs.size() - 1 after trailing-zero trimming). Roots at the origin
/// from vanishing low-order coefficients are included. Computed as the
/// eigenvalues of the balanced companion matrix, then polished with a few
/// Newton steps where the derivative allows it.
std::vector<std::complex<double>> poly_roots(std::vector<std::complex<double>> coeffs);

/// Horner evaluation of the same coefficient convention.
std::complex<double> poly_eval(const std::vector<std::complex<double>>& coeffs,
                               std::complex<double> z);

}  // namespace nlfft
