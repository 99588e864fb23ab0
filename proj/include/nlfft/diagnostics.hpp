#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "nlfft/nlft.hpp"

namespace nlfft {

using Mat = Eigen::MatrixXcd;

/// Gram matrix K = T(a0) T(a0)* + T(b0) T(b0)* of the lower-triangular
/// Toeplitz operators built from the coefficient windows. Dense; sizes are
/// capped at config::kDenseCap.
Mat build_K(std::span<const cd> a_star, std::span<const cd> b);

/// Max-entry residual of K - Z K Z* = a0 a0* + b0 b0*.
double displacement_residual(const Mat& k, std::span<const cd> a_star, std::span<const cd> b);

/// Triangular view of the stripping run: L unit lower-triangular with
/// columns a_{j,k+1}/a_{0,k+1}, diagonal D = diag(a_{0,k+1}^2), H = sqrt(D),
/// U = L H, and the Gram matrix K = L D L*.
struct StripMatrices {
  Mat L;
  Mat U;
  Mat K;
  Eigen::VectorXd d;
  Eigen::VectorXd h;
  std::vector<cd> gamma;
  double a00 = 0.0;
  std::vector<cd> b0;
};
StripMatrices build_strip_matrices(const NlftPair& p);

/// Substitutes the stripping output into the triangular system:
/// reports ||L gamma - b0 / a00||_inf.
struct LinearSystemReport {
  int n = 0;
  double residual_inf = 0.0;
};
LinearSystemReport verify_L_system(const NlftPair& p);

/// Spectral bounds tied to the circle margin eta: eigenvalue window of K,
/// norms of L, L^{-1}, (D L*)^{-1}. Requires the certified no-zeros-in-the-
/// closed-disk property of a*.
struct NormBoundsReport {
  double eta_hat = 0.0;
  double lambda_min = 0.0, lambda_max = 0.0;
  double norm_L = 0.0, norm_L_inv = 0.0, norm_DL_inv = 0.0;
  double slack = 1e-8;
  bool lambda_lower_ok = false, lambda_upper_ok = false;
  bool l_ok = false, l_inv_ok = false, dl_ok = false;
  bool pass = false;
};
NormBoundsReport norm_bounds_report(const NlftPair& p, double slack = 1e-8);

/// Sup over a circle grid of the 2-norm distance between the transfer
/// matrix of p and the transform of g. grid = 0 picks a default.
double residual_on_circle(const NlftPair& p, const ComplexSequence& g, std::size_t grid = 0);

/// Random real b with grid sup-norm 1/2, completed two ways (zero-free
/// complement and its reflected counterpart), both inverted sequentially.
/// flipped_entry_error charts |gamma_hat_k - gamma_k| of the reflected run
/// against an extended-precision reference; fit_slope is the slope of the
/// log-linear fit through those errors.
struct InstabilityResult {
  int n = 0;
  double residual_outer = 0.0;
  double residual_flipped = 0.0;
  std::vector<double> flipped_entry_error;
  double fit_slope = 0.0;
};
InstabilityResult instability_experiment(int n, std::uint64_t seed, std::size_t grid = 0);

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Transform-side Lipschitz estimate: for sequences of equal support length
/// n, n^{-1/p} ||da||_p + n^{-1/q} ||db||_q <= 6 n^{1/2 - 1/r} ||dg||_r.
/// Pass std::numeric_limits<double>::infinity() for sup-norms.
InequalityReport nlft_lipschitz_check(const ComplexSequence& g1, const ComplexSequence& g2,
                                      double p, double q, double r);

/// Rotor-map bounds: ||Theta(g1) - Theta(g2)||_2 <= sqrt(10) |g1 - g2| and
/// ||.||_1 <= 3 |g1 - g2|.
struct ThetaBoundReport {
  InequalityReport two_norm;
  InequalityReport one_norm;
};
ThetaBoundReport theta_map_check(cd g1, cd g2);

/// The explicit sequence of pairs witnessing that the inverse map is not
/// uniformly continuous: consecutive outputs stay >= 1/sqrt(2) apart while
/// the squared input distance decays like 10/k^4.
struct WitnessRow {
  int k = 0;
  double delta_gamma = 0.0;
  double pair_dist_sq = 0.0;
  double pair_bound = 0.0;
};
std::vector<WitnessRow> nonuniform_witness(int n, int k_min, int k_max);

/// Locally Lipschitz estimate for the inverse map:
/// ||dg||_1 <= eps (3n)^n (1 + 1/delta)^(2n) with eps the sup coefficient
/// perturbation and delta the smaller a*(0). Meaningful at small n only.
InequalityReport inverse_local_lipschitz_check(const NlftPair& p1, const NlftPair& p2);

/// Extended-precision sequential inverse for real coefficient windows;
/// ground truth for error-accumulation charts.
std::vector<double> layer_strip_real_reference(std::vector<double> a_star,
                                               std::vector<double> b);

}  // namespace nlfft
