#include "nlfft/inverse.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

#include "nlfft/errors.hpp"

namespace nlfft {
namespace {

[[noreturn]] void fail_nonpositive(int step, double value) {
  std::ostringstream os;
  os << "layer stripping: a_{0," << step << "} = " << value
     << " is not positive (input outside the image set, or precision collapse)";
  throw NumericalFailure(os.str());
}

std::vector<cd> a_star_window(const NlftPair& p, std::size_t n) {
  // Coefficients of a^*(z) in ascending powers: conj of a at mirrored degrees.
  std::vector<cd> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = std::conj(p.a.coeff(-static_cast<int>(j)));
  return w;
}

// Degree-indexed coefficient window of a polynomial part, length len.
std::vector<cd> poly_window(const LaurentPoly& p, std::size_t len) {
  std::vector<cd> w(len, cd{0.0, 0.0});
  for (std::size_t j = 0; j < len; ++j) w[j] = p.coeff(static_cast<int>(j));
  return w;
}

// Coefficients of z^m * v*(z) for a window v of length m: index 0 is zero,
// index j is conj(v[m - j]).
std::vector<cd> sharp_window(const std::vector<cd>& v) {
  const std::size_t m = v.size();
  std::vector<cd> s(m + 1, cd{0.0, 0.0});
  for (std::size_t j = 1; j <= m; ++j) s[j] = std::conj(v[m - j]);
  return s;
}

struct InlCtx {
  int leaf;
};

TransferPair inl_recurse(std::span<const cd> a0, std::span<const cd> b0,
                         std::span<cd> out, int base, const InlCtx& ctx) {
  const std::size_t n = a0.size();
  if (n == 1) {
    if (a0[0].real() <= 0.0) fail_nonpositive(base, a0[0].real());
    const cd g = b0[0] / a0[0];
    out[0] = g;
    return transfer_of(out.subspan(0, 1));
  }
  if (ctx.leaf > 1 && n <= static_cast<std::size_t>(ctx.leaf)) {
    std::vector<cd> g = layer_strip_general(std::vector<cd>(a0.begin(), a0.end()),
                                            std::vector<cd>(b0.begin(), b0.end()), n);
    std::copy(g.begin(), g.end(), out.begin());
    return transfer_of(out.subspan(0, n));
  }

  const std::size_t m = (n + 1) / 2;
  const TransferPair left = inl_recurse(a0.subspan(0, m), b0.subspan(0, m),
                                        out.subspan(0, m), base, ctx);

  // Advance the window by m factors:
  //   a_m^* = z^-m (eta# a_0^* + xi# b_0),   b_m = z^-m (eta b_0 - xi a_0^*).
  // The division by z^m is an index offset; coefficients below it are
  // analytically zero for exact inputs and are discarded otherwise.
  const std::vector<cd> xi_w = poly_window(left.xi, m);
  const std::vector<cd> eta_w = poly_window(left.eta, m);
  const std::vector<cd> xi_sharp = sharp_window(xi_w);
  const std::vector<cd> eta_sharp = sharp_window(eta_w);

  const std::vector<cd> ea = convolve(eta_sharp, a0);
  const std::vector<cd> xb = convolve(xi_sharp, b0);
  const std::vector<cd> eb = convolve(eta_w, b0);
  const std::vector<cd> xa = convolve(xi_w, a0);

  const std::size_t rest = n - m;
  std::vector<cd> am(rest), bm(rest);
  for (std::size_t j = 0; j < rest; ++j) {
    am[j] = ea[m + j] + xb[m + j];
    bm[j] = eb[m + j] - xa[m + j];
  }

  const TransferPair right =
      inl_recurse(am, bm, out.subspan(m), base + static_cast<int>(m), ctx);
  return transfer_combine(left, right);
}

}  // namespace

double GivensRotor::scale() const { return 1.0 / std::sqrt(1.0 + std::norm(gamma)); }

void GivensRotor::apply(cd& x, cd& y) const {
  const double s = scale();
  const cd nx = (x + std::conj(gamma) * y) * s;
  const cd ny = (y - gamma * x) * s;
  x = nx;
  y = ny;
}

void givens_apply(std::span<cd> a_col, std::span<cd> b_col, const GivensRotor& r) {
  assert(a_col.size() == b_col.size());
  for (std::size_t j = 0; j < a_col.size(); ++j) r.apply(a_col[j], b_col[j]);
}

StripState::StripState(std::vector<cd> a_star, std::vector<cd> b)
    : a_(std::move(a_star)), b_(std::move(b)), a_len_(a_.size()) {
  if (a_.size() != b_.size() || a_.empty()) {
    throw InvalidInput("stripping state needs equal-length nonempty windows");
  }
}

cd StripState::gamma() const {
  const cd a0 = a_[0];
  if (a0.real() <= 0.0) fail_nonpositive(step_, a0.real());
  return b_[b_start_] / a0;
}

void StripState::rotate(cd gk) {
  givens_apply({a_.data(), a_len_}, {b_.data() + b_start_, a_len_}, GivensRotor{gk});
}

void StripState::drop() {
  // The leading entry of the rotated b column is zero by the choice of
  // gamma_k; the trailing a entry vanishes for image-set input and is
  // discarded regardless in the generalized iteration.
  ++b_start_;
  --a_len_;
  ++step_;
}

cd StripState::advance() {
  const cd gk = gamma();
  rotate(gk);
  drop();
  return gk;
}

ComplexSequence layer_strip_observed(const NlftPair& p, const StripObserver& observe,
                                     double tol) {
  const PairReport rep = pair_check(p, tol);
  if (!rep.pass) throw InvalidInput("layer_strip: input fails membership check: " + rep.detail);
  if (p.b.is_zero()) return {};
  if (p.b.low_deg() != 0) {
    throw InvalidInput("layer_strip: b must be normalized to lowest degree 0");
  }

  const std::size_t n = p.b.size();
  StripState st(a_star_window(p, n), poly_window(p.b, n));
  std::vector<cd> gamma(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cd gk = st.gamma();
    st.rotate(gk);
    gamma[k] = gk;
    if (observe) observe(static_cast<int>(k), gk, st.a_col(), st.b_col());
    st.drop();
  }
  return ComplexSequence(std::move(gamma), 0);
}

ComplexSequence layer_strip(const NlftPair& p, double tol) {
  return layer_strip_observed(p, nullptr, tol);
}

std::vector<cd> layer_strip_general(std::vector<cd> a_star, std::vector<cd> b,
                                    std::size_t steps) {
  if (steps == 0) return {};
  if (a_star.size() < steps || a_star.size() != b.size()) {
    throw InvalidInput("layer_strip_general: need equal-length windows with length >= steps");
  }
  StripState st(std::move(a_star), std::move(b));
  std::vector<cd> gamma(steps);
  for (std::size_t k = 0; k < steps; ++k) gamma[k] = st.advance();
  return gamma;
}

InverseFftResult inlfft(std::vector<cd> a_star, std::vector<cd> b,
                        const InverseFftOptions& opts) {
  if (a_star.size() != b.size() || a_star.empty()) {
    throw InvalidInput("inlfft: coefficient vectors must be nonempty and of equal length");
  }
  const std::size_t n = a_star.size();
  const std::size_t padded = fft::next_pow2(n);
  a_star.resize(padded, cd{0.0, 0.0});
  b.resize(padded, cd{0.0, 0.0});

  std::vector<cd> gamma(padded);
  InlCtx ctx{opts.leaf_size};
  TransferPair t = inl_recurse(a_star, b, gamma, 0, ctx);
  gamma.resize(n);

  if (padded != n) {
    // The transfer pair of the padded sequence equals that of the original
    // one; restrict the coefficient windows back to degrees < n.
    TransferPair trimmed;
    trimmed.length = static_cast<int>(n);
    trimmed.xi = LaurentPoly(0, poly_window(t.xi, n));
    trimmed.eta = LaurentPoly(0, poly_window(t.eta, n));
    t = std::move(trimmed);
  }
  return {std::move(gamma), std::move(t)};
}

ComplexSequence inverse_nlft(const NlftPair& p, InverseMethod method, double tol,
                             const InverseFftOptions& opts) {
  if (p.b.is_zero()) {
    const PairReport rep = pair_check(p, tol);
    if (!rep.pass) throw InvalidInput("inverse_nlft: input fails membership check: " + rep.detail);
    return {};
  }
  const int offset = p.b.low_deg();
  const NlftPair based = shift_support(p, -offset);

  ComplexSequence seq;
  if (method == InverseMethod::layer) {
    seq = layer_strip(based, tol);
  } else {
    const PairReport rep = pair_check(based, tol);
    if (!rep.pass) throw InvalidInput("inverse_nlft: input fails membership check: " + rep.detail);
    const std::size_t n = based.b.size();
    InverseFftResult r = inlfft(a_star_window(based, n), poly_window(based.b, n), opts);
    seq = ComplexSequence(std::move(r.gamma), 0);
  }
  seq.support_offset = offset;
  return seq;
}

}  // namespace nlfft
