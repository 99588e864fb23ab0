#include "nlfft/nlft.hpp"

#include <cmath>
#include <sstream>

#include "nlfft/errors.hpp"

namespace nlfft {
namespace {

bool nonzero(cd c) { return c.real() != 0.0 || c.imag() != 0.0; }

TransferPair transfer_leaf(cd g) {
  const double s = 1.0 / std::sqrt(1.0 + std::norm(g));
  TransferPair t;
  t.length = 1;
  t.eta = LaurentPoly::constant(s);
  t.xi = nonzero(g) ? LaurentPoly::constant(g * s) : LaurentPoly{};
  return t;
}

TransferPair transfer_tree(std::span<const cd> w) {
  if (w.size() == 1) return transfer_leaf(w[0]);
  const std::size_t m = (w.size() + 1) / 2;
  const TransferPair left = transfer_tree(w.subspan(0, m));
  const TransferPair right = transfer_tree(w.subspan(m));
  return transfer_combine(left, right);
}

}  // namespace

ComplexSequence::ComplexSequence(std::vector<cd> vals, int offset, bool strict_support)
    : values(std::move(vals)), support_offset(offset), strict(strict_support) {
  if (strict && !values.empty() && (!nonzero(values.front()) || !nonzero(values.back()))) {
    throw InvalidInput("strict sequence must have nonzero first and last entries");
  }
}

NlftPair forward_nlft_naive(const ComplexSequence& g) {
  LaurentPoly a = LaurentPoly::constant(1.0);
  LaurentPoly b;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const cd gk = g.values[j];
    if (!nonzero(gk)) continue;  // identity factor
    const int k = g.support_offset + static_cast<int>(j);
    const cd s = 1.0 / std::sqrt(1.0 + std::norm(gk));
    // [[a, b], [-b*, a*]] * (s * [[1, gk z^k], [-conj(gk) z^-k, 1]])
    LaurentPoly a_next =
        lp_scale(lp_sub(a, lp_scale(lp_shift(b, -k), std::conj(gk))), s);
    LaurentPoly b_next = lp_scale(lp_add(lp_scale(lp_shift(a, k), gk), b), s);
    a = std::move(a_next);
    b = std::move(b_next);
  }
  return {a, b};
}

TransferPair transfer_combine(const TransferPair& left, const TransferPair& right) {
  TransferPair out;
  out.length = left.length + right.length;
  const LaurentPoly eta_sharp = left.eta_sharp();
  const LaurentPoly xi_sharp = left.xi_sharp();
  out.xi = lp_add(lp_mul(eta_sharp, right.xi), lp_mul(left.xi, right.eta));
  out.eta = lp_sub(lp_mul(left.eta, right.eta), lp_mul(xi_sharp, right.xi));
  return out;
}

TransferPair transfer_of(std::span<const cd> window) {
  if (window.empty()) {
    TransferPair t;
    t.eta = LaurentPoly::constant(1.0);
    return t;
  }
  return transfer_tree(window);
}

NlftPair forward_nlft_fast(const ComplexSequence& g) {
  if (g.empty()) return {LaurentPoly::constant(1.0), LaurentPoly{}};
  const TransferPair t = transfer_of(g.values);
  return {lp_star(t.eta), lp_shift(t.xi, g.support_offset)};
}

PairReport pair_check(const NlftPair& p, double tol) {
  PairReport r;
  r.tol = tol;

  const LaurentPoly unit =
      lp_add(lp_mul(p.a, lp_star(p.a)), lp_mul(p.b, lp_star(p.b)));
  r.residual = lp_coeff_dist(unit, LaurentPoly::constant(1.0));

  // a*(0) is the z^0 coefficient of a, conjugated.
  const cd a0 = std::conj(p.a.coeff(0));
  r.a0 = a0.real();
  r.a0_imag = std::abs(a0.imag());
  r.a0_positive = a0.real() > 0.0 && r.a0_imag <= tol;

  std::ostringstream why;
  if (p.b.is_zero()) {
    // Then aa* = 1 with a*(0) > 0, so a must be the constant 1.
    r.degrees_ok = !p.a.is_zero() && p.a.low_deg() == 0 && p.a.high_deg() == 0;
    if (!r.degrees_ok) why << "b = 0 requires constant a; ";
  } else {
    const int m = p.b.low_deg();
    const int n = p.b.high_deg();
    r.degrees_ok = !p.a.is_zero() && p.a.high_deg() == 0 && p.a.low_deg() >= m - n;
    if (!r.degrees_ok) why << "degree window of a incompatible with b; ";
  }
  if (r.residual > tol) why << "unitarity residual " << r.residual << " > tol; ";
  if (!r.a0_positive) why << "a*(0) not real-positive; ";
  r.pass = r.degrees_ok && r.residual <= tol && r.a0_positive;
  r.detail = why.str();
  return r;
}

double eta_of(const NlftPair& p, std::size_t grid) {
  if (p.b.is_zero()) return 1.0;
  if (grid == 0) {
    grid = fft::next_pow2(p.b.size() * static_cast<std::size_t>(config::kEtaGridFactor));
  }
  return 1.0 - lp_max_on_circle(p.b, grid);
}

NlftPair shift_support(const NlftPair& p, int k) { return {p.a, lp_shift(p.b, k)}; }

}  // namespace nlfft
