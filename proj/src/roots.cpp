#include "nlfft/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "nlfft/errors.hpp"

namespace nlfft {
namespace {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

// Parlett-Reinsch style balancing with power-of-two scale factors; brings
// row and column norms of the companion matrix together without rounding.
void balance(Mat& m) {
  const Eigen::Index n = m.rows();
  bool changed = true;
  for (int pass = 0; pass < 32 && changed; ++pass) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double row = 0.0, col = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        row += std::abs(m(i, j));
        col += std::abs(m(j, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      double f = 1.0;
      const double s = row + col;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        f *= 2.0;
      }
      while (col > row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        f /= 2.0;
      }
      if (f != 1.0 && (row + col) < 0.95 * s) {
        changed = true;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

cd poly_eval_derivative(const std::vector<cd>& c, cd z, cd* deriv) {
  cd p{0.0, 0.0}, d{0.0, 0.0};
  for (std::size_t j = c.size(); j-- > 0;) {
    d = d * z + p;
    p = p * z + c[j];
  }
  *deriv = d;
  return p;
}

void newton_polish(const std::vector<cd>& c, cd& root) {
  for (int it = 0; it < 3; ++it) {
    cd d;
    const cd p = poly_eval_derivative(c, root, &d);
    if (std::abs(d) < 1e-300) return;
    const cd step = p / d;
    if (!(std::isfinite(step.real()) && std::isfinite(step.imag()))) return;
    if (std::abs(step) > 0.1 * std::max(1.0, std::abs(root))) return;  // not in basin
    root -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(root))) return;
  }
}

}  // namespace

cd poly_eval(const std::vector<cd>& coeffs, cd z) {
  cd acc{0.0, 0.0};
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * z + coeffs[j];
  return acc;
}

std::vector<cd> poly_roots(std::vector<cd> coeffs) {
  while (!coeffs.empty() && coeffs.back() == cd{0.0, 0.0}) coeffs.pop_back();
  if (coeffs.size() <= 1) {
    if (coeffs.empty()) throw InvalidInput("poly_roots: zero polynomial");
    return {};
  }

  std::vector<cd> roots;
  std::size_t origin = 0;
  while (origin < coeffs.size() - 1 && coeffs[origin] == cd{0.0, 0.0}) ++origin;
  roots.assign(origin, cd{0.0, 0.0});
  if (origin > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(origin));

  const std::size_t deg = coeffs.size() - 1;
  if (deg == 0) return roots;
  if (deg == 1) {
    roots.push_back(-coeffs[0] / coeffs[1]);
    return roots;
  }
  if (deg == 2) {
    const cd a = coeffs[2], b = coeffs[1], c = coeffs[0];
    const cd disc = std::sqrt(b * b - 4.0 * a * c);
    // pick the sign that avoids cancellation
    const cd q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
    roots.push_back(q / a);
    roots.push_back(c / q);
    return roots;
  }

  Mat companion = Mat::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  const cd lead = coeffs[deg];
  for (std::size_t j = 0; j < deg; ++j) {
    companion(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(deg - 1)) =
        -coeffs[j] / lead;
    if (j + 1 < deg) {
      companion(static_cast<Eigen::Index>(j + 1), static_cast<Eigen::Index>(j)) = 1.0;
    }
  }
  balance(companion);

  Eigen::ComplexEigenSolver<Mat> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("poly_roots: companion eigensolve did not converge");
  }
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    cd r = solver.eigenvalues()(i);
    newton_polish(coeffs, r);
    roots.push_back(r);
  }
  return roots;
}

}  // namespace nlfft
