#include "nlfft/diagnostics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "nlfft/complement.hpp"
#include "nlfft/config.hpp"
#include "nlfft/errors.hpp"
#include "nlfft/inverse.hpp"

namespace nlfft {
namespace {

#if defined(__SIZEOF_FLOAT128__)
using wide = __float128;
#else
using wide = long double;
#endif

wide wide_sqrt(wide v) {
  if (v <= 0) return 0;
  wide x = static_cast<wide>(std::sqrt(static_cast<double>(v)));
  for (int i = 0; i < 3; ++i) x = 0.5 * (x + v / x);
  return x;
}

void check_dense_cap(std::size_t n) {
  if (n > static_cast<std::size_t>(config::kDenseCap)) {
    std::ostringstream os;
    os << "dense diagnostics capped at n = " << config::kDenseCap << " (got " << n << ")";
    throw InvalidInput(os.str());
  }
}

Mat toeplitz_lower(std::span<const cd> col) {
  const Eigen::Index n = static_cast<Eigen::Index>(col.size());
  Mat t = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      t(i, j) = col[static_cast<std::size_t>(i - j)];
    }
  }
  return t;
}

std::vector<cd> initial_a_star(const NlftPair& p, std::size_t n) {
  std::vector<cd> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = std::conj(p.a.coeff(-static_cast<int>(j)));
  return w;
}

std::vector<cd> initial_b(const NlftPair& p, std::size_t n) {
  std::vector<cd> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = p.b.coeff(static_cast<int>(j));
  return w;
}

double matrix_2norm(const Mat& m) {
  Eigen::BDCSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

double matrix_smallest_sv(const Mat& m) {
  Eigen::BDCSVD<Mat> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

double lp_norm(std::span<const cd> v, double p) {
  if (std::isinf(p)) {
    double best = 0.0;
    for (cd c : v) best = std::max(best, std::abs(c));
    return best;
  }
  double s = 0.0;
  for (cd c : v) s += std::pow(std::abs(c), p);
  return std::pow(s, 1.0 / p);
}

std::vector<cd> coeff_diff(const LaurentPoly& x, const LaurentPoly& y, int low, int high) {
  std::vector<cd> d(static_cast<std::size_t>(high - low + 1));
  for (int k = low; k <= high; ++k) {
    d[static_cast<std::size_t>(k - low)] = x.coeff(k) - y.coeff(k);
  }
  return d;
}

double fit_log_slope(std::span<const double> values) {
  // Least-squares slope of log(values[k]) against k over positive entries.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] <= 0.0) continue;
    const double x = static_cast<double>(k);
    const double y = std::log(values[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return 0.0;
  const double denom = m * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
}

}  // namespace

Mat build_K(std::span<const cd> a_star, std::span<const cd> b) {
  if (a_star.size() != b.size() || a_star.empty()) {
    throw InvalidInput("build_K: equal-length nonempty windows required");
  }
  check_dense_cap(a_star.size());
  const Mat ta = toeplitz_lower(a_star);
  const Mat tb = toeplitz_lower(b);
  return ta * ta.adjoint() + tb * tb.adjoint();
}

double displacement_residual(const Mat& k, std::span<const cd> a_star,
                             std::span<const cd> b) {
  const Eigen::Index n = k.rows();
  Mat shifted = Mat::Zero(n, n);
  shifted.block(1, 1, n - 1, n - 1) = k.block(0, 0, n - 1, n - 1);
  Mat rhs = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      rhs(i, j) = a_star[static_cast<std::size_t>(i)] * std::conj(a_star[static_cast<std::size_t>(j)]) +
                  b[static_cast<std::size_t>(i)] * std::conj(b[static_cast<std::size_t>(j)]);
    }
  }
  return ((k - shifted) - rhs).cwiseAbs().maxCoeff();
}

StripMatrices build_strip_matrices(const NlftPair& p) {
  const NlftPair based = p.b.is_zero() ? p : shift_support(p, -p.b.low_deg());
  if (based.b.is_zero()) throw InvalidInput("build_strip_matrices: b = 0 has no strip matrices");
  const std::size_t n = based.b.size();
  check_dense_cap(n);

  StripMatrices out;
  const Eigen::Index ni = static_cast<Eigen::Index>(n);
  out.L = Mat::Zero(ni, ni);
  out.U = Mat::Zero(ni, ni);
  out.d = Eigen::VectorXd::Zero(ni);
  out.h = Eigen::VectorXd::Zero(ni);

  const std::vector<cd> a0 = initial_a_star(based, n);
  const std::vector<cd> b0 = initial_b(based, n);
  out.a00 = a0[0].real();
  out.b0 = b0;
  out.K = build_K(a0, b0);

  const ComplexSequence g = layer_strip_observed(
      based,
      [&](int k, cd, std::span<const cd> a_col, std::span<const cd>) {
        const cd top = a_col[0];
        out.h(k) = top.real();
        out.d(k) = std::norm(top);
        for (std::size_t j = 0; j < a_col.size(); ++j) {
          out.U(k + static_cast<Eigen::Index>(j), k) = a_col[j];
          out.L(k + static_cast<Eigen::Index>(j), k) = a_col[j] / top;
        }
      });
  out.gamma = g.values;
  return out;
}

LinearSystemReport verify_L_system(const NlftPair& p) {
  const StripMatrices sm = build_strip_matrices(p);
  const Eigen::Index n = sm.L.rows();
  Eigen::VectorXcd gamma(n), target(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    gamma(i) = sm.gamma[static_cast<std::size_t>(i)];
    target(i) = sm.b0[static_cast<std::size_t>(i)] / sm.a00;
  }
  const double residual = (sm.L * gamma - target).cwiseAbs().maxCoeff();
  return {static_cast<int>(n), residual};
}

NormBoundsReport norm_bounds_report(const NlftPair& p, double slack) {
  const LaurentPoly a_star = lp_star(p.a);
  if (is_outer_poly(a_star) != Outerness::outer_closed_disk) {
    throw InvalidInput("norm_bounds_report: a* is not certified zero-free on the closed disk");
  }
  const StripMatrices sm = build_strip_matrices(p);
  NormBoundsReport r;
  r.slack = slack;
  r.eta_hat = eta_of(p);

  Eigen::SelfAdjointEigenSolver<Mat> eig(sm.K, Eigen::EigenvaluesOnly);
  r.lambda_min = eig.eigenvalues().minCoeff();
  r.lambda_max = eig.eigenvalues().maxCoeff();
  r.norm_L = matrix_2norm(sm.L);
  r.norm_L_inv = 1.0 / matrix_smallest_sv(sm.L);
  const Mat dl = sm.d.cast<cd>().asDiagonal() * sm.L.adjoint();
  r.norm_DL_inv = 1.0 / matrix_smallest_sv(dl);

  const double eta = r.eta_hat;
  const double lo = eta * (2.0 - eta);
  r.lambda_lower_ok = r.lambda_min >= lo - slack;
  r.lambda_upper_ok = r.lambda_max <= 2.0 - eta + slack;
  const double cap = 1.0 / std::sqrt(eta);
  r.l_ok = r.norm_L >= 1.0 - slack && r.norm_L <= cap + slack;
  r.l_inv_ok = r.norm_L_inv >= 1.0 - slack && r.norm_L_inv <= cap + slack;
  r.dl_ok = r.norm_DL_inv <= 1.0 / lo + slack;
  r.pass = r.lambda_lower_ok && r.lambda_upper_ok && r.l_ok && r.l_inv_ok && r.dl_ok;
  return r;
}

double residual_on_circle(const NlftPair& p, const ComplexSequence& g, std::size_t grid) {
  const NlftPair q = forward_nlft_fast(g);
  if (grid == 0) {
    const std::size_t width = std::max<std::size_t>(
        {p.b.size(), p.a.size(), q.b.size(), q.a.size(), 4});
    grid = fft::next_pow2(width * static_cast<std::size_t>(config::kEtaGridFactor));
  }
  const std::vector<cd> da = lp_eval_circle(lp_sub(p.a, q.a), grid);
  const std::vector<cd> db = lp_eval_circle(lp_sub(p.b, q.b), grid);
  double worst = 0.0;
  for (std::size_t j = 0; j < grid; ++j) {
    // For this matrix structure the 2-norm at a circle point is exactly
    // sqrt(|da|^2 + |db|^2).
    worst = std::max(worst, std::sqrt(std::norm(da[j]) + std::norm(db[j])));
  }
  return worst;
}

std::vector<double> layer_strip_real_reference(std::vector<double> a_star,
                                               std::vector<double> b) {
  if (a_star.size() != b.size() || a_star.empty()) {
    throw InvalidInput("reference strip: equal-length nonempty windows required");
  }
  const std::size_t n = a_star.size();
  std::vector<wide> a(a_star.begin(), a_star.end());
  std::vector<wide> bw(b.begin(), b.end());
  std::vector<double> gamma(n);
  std::size_t start = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t len = n - k;
    if (!(a[0] > 0)) {
      std::ostringstream os;
      os << "reference strip: nonpositive pivot at step " << k;
      throw NumericalFailure(os.str());
    }
    const wide g = bw[start] / a[0];
    const wide s = 1.0 / wide_sqrt(1.0 + g * g);
    for (std::size_t j = 0; j < len; ++j) {
      const wide na = (a[j] + g * bw[start + j]) * s;
      const wide nb = (bw[start + j] - g * a[j]) * s;
      a[j] = na;
      bw[start + j] = nb;
    }
    gamma[k] = static_cast<double>(g);
    ++start;
  }
  return gamma;
}

InstabilityResult instability_experiment(int n, std::uint64_t seed, std::size_t grid) {
  if (n < 4) throw InvalidInput("instability_experiment: n must be >= 4");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  LaurentPoly b;
  for (int attempt = 0; attempt < 64 && b.is_zero(); ++attempt) {
    std::vector<cd> coeffs(static_cast<std::size_t>(n));
    for (auto& c : coeffs) c = cd{unit(rng), 0.0};
    b = LaurentPoly(0, std::move(coeffs));
  }
  const std::size_t sample = fft::next_pow2(static_cast<std::size_t>(4 * n));
  b = lp_scale(b, cd{0.5 / lp_max_on_circle(b, sample), 0.0});

  const NlftPair outer = complete_b_outer(b);
  const NlftPair flipped = flip_to_antiouter(outer);

  // Completion is root-finding based; give the membership gate a little
  // more room than the default.
  const double tol = 1e-7;
  const ComplexSequence g_outer = layer_strip(outer, tol);
  const ComplexSequence g_flipped = layer_strip(flipped, tol);

  InstabilityResult out;
  out.n = n;
  out.residual_outer = residual_on_circle(outer, g_outer, grid);
  out.residual_flipped = residual_on_circle(flipped, g_flipped, grid);

  std::vector<double> ref_a(static_cast<std::size_t>(n)), ref_b(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    ref_a[static_cast<std::size_t>(j)] = std::conj(flipped.a.coeff(-j)).real();
    ref_b[static_cast<std::size_t>(j)] = flipped.b.coeff(j).real();
  }
  const std::vector<double> reference = layer_strip_real_reference(ref_a, ref_b);
  out.flipped_entry_error.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    out.flipped_entry_error[static_cast<std::size_t>(k)] =
        std::abs(g_flipped.values[static_cast<std::size_t>(k)] -
                 reference[static_cast<std::size_t>(k)]);
  }
  out.fit_slope = fit_log_slope(out.flipped_entry_error);
  return out;
}

InequalityReport nlft_lipschitz_check(const ComplexSequence& g1, const ComplexSequence& g2,
                                      double p, double q, double r) {
  if (g1.size() != g2.size() || g1.support_offset != g2.support_offset || g1.empty()) {
    throw InvalidInput("lipschitz check: sequences must share a nonempty support window");
  }
  const double n = static_cast<double>(g1.size());
  const NlftPair t1 = forward_nlft_fast(g1);
  const NlftPair t2 = forward_nlft_fast(g2);

  const int m = g1.support_offset;
  const int top = m + static_cast<int>(g1.size()) - 1;
  const std::vector<cd> da = coeff_diff(t1.a, t2.a, m - top, 0);
  const std::vector<cd> db = coeff_diff(t1.b, t2.b, m, top);
  std::vector<cd> dg(g1.size());
  for (std::size_t j = 0; j < g1.size(); ++j) dg[j] = g1.values[j] - g2.values[j];

  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
  const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;

  InequalityReport rep;
  rep.lhs = std::pow(n, -inv_p) * lp_norm(da, p) + std::pow(n, -inv_q) * lp_norm(db, q);
  rep.rhs = 6.0 * std::pow(n, 0.5 - inv_r) * lp_norm(dg, r);
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

ThetaBoundReport theta_map_check(cd g1, cd g2) {
  const auto theta = [](cd g) {
    const double s = 1.0 / std::sqrt(1.0 + std::norm(g));
    Eigen::Matrix2cd m;
    m << s, -g * s, std::conj(g) * s, s;
    return m;
  };
  const Eigen::Matrix2cd diff = theta(g1) - theta(g2);
  const double dist = std::abs(g1 - g2);

  ThetaBoundReport rep;
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(diff);
  rep.two_norm.lhs = svd.singularValues()(0);
  rep.two_norm.rhs = std::sqrt(10.0) * dist;
  rep.two_norm.holds = rep.two_norm.lhs <= rep.two_norm.rhs;
  rep.one_norm.lhs = std::max(std::abs(diff(0, 0)) + std::abs(diff(1, 0)),
                              std::abs(diff(0, 1)) + std::abs(diff(1, 1)));
  rep.one_norm.rhs = 3.0 * dist;
  rep.one_norm.holds = rep.one_norm.lhs <= rep.one_norm.rhs;
  return rep;
}

std::vector<WitnessRow> nonuniform_witness(int n, int k_min, int k_max) {
  if (n < 2 || k_min < 2 || k_max <= k_min) {
    throw InvalidInput("nonuniform_witness: need n >= 2 and 2 <= k_min < k_max");
  }
  const auto make_pair = [n](int k) {
    const double head = 1.0 / static_cast<double>(k);
    const double s = std::sqrt(0.5 - head * head);
    std::vector<cd> a(static_cast<std::size_t>(n), cd{0.0, 0.0});
    std::vector<cd> b(static_cast<std::size_t>(n), cd{0.0, 0.0});
    a.front() = s;  // coefficient of z^{-(n-1)}
    a.back() = head;
    b.front() = s;
    b.back() = -head;
    return NlftPair{LaurentPoly(-(n - 1), std::move(a)), LaurentPoly(0, std::move(b))};
  };

  std::vector<WitnessRow> rows;
  NlftPair prev = make_pair(k_min);
  ComplexSequence prev_g = layer_strip(prev);
  for (int k = k_min; k < k_max; ++k) {
    const NlftPair next = make_pair(k + 1);
    const ComplexSequence next_g = layer_strip(next);

    WitnessRow row;
    row.k = k;
    double acc = 0.0;
    for (std::size_t j = 0; j < prev_g.size(); ++j) {
      acc += std::norm(next_g.values[j] - prev_g.values[j]);
    }
    row.delta_gamma = std::sqrt(acc);
    double dist = 0.0;
    for (cd c : coeff_diff(next.a, prev.a, -(n - 1), 0)) dist += std::norm(c);
    for (cd c : coeff_diff(next.b, prev.b, 0, n - 1)) dist += std::norm(c);
    row.pair_dist_sq = dist;
    row.pair_bound = 10.0 / std::pow(static_cast<double>(k), 4.0);
    rows.push_back(row);

    prev = next;
    prev_g = next_g;
  }
  return rows;
}

InequalityReport inverse_local_lipschitz_check(const NlftPair& p1, const NlftPair& p2) {
  if (p1.b.is_zero() || p2.b.is_zero() || p1.b.size() != p2.b.size()) {
    throw InvalidInput("local lipschitz check: pairs must share the support length");
  }
  const std::size_t n = p1.b.size();
  const int low_a = -(static_cast<int>(n) - 1);
  std::vector<cd> da = coeff_diff(p1.a, p2.a, low_a, 0);
  std::vector<cd> db = coeff_diff(p1.b, p2.b, 0, static_cast<int>(n) - 1);
  const double inf = std::numeric_limits<double>::infinity();
  const double eps = std::max(lp_norm(da, inf), lp_norm(db, inf));
  const double delta =
      std::min(std::conj(p1.a.coeff(0)).real(), std::conj(p2.a.coeff(0)).real());

  const ComplexSequence g1 = layer_strip(p1);
  const ComplexSequence g2 = layer_strip(p2);
  double l1 = 0.0;
  for (std::size_t j = 0; j < n; ++j) l1 += std::abs(g1.values[j] - g2.values[j]);

  InequalityReport rep;
  rep.lhs = l1;
  const double nn = static_cast<double>(n);
  rep.rhs = eps * std::pow(3.0 * nn, nn) * std::pow(1.0 + 1.0 / delta, 2.0 * nn);
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

}  // namespace nlfft
