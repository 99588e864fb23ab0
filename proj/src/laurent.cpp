#include "nlfft/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlfft/config.hpp"
#include "nlfft/errors.hpp"

namespace nlfft {
namespace {

bool is_exact_zero(cd c) { return c.real() == 0.0 && c.imag() == 0.0; }

std::vector<cd> schoolbook(std::span<const cd> x, std::span<const cd> y) {
  std::vector<cd> out(x.size() + y.size() - 1, cd{0.0, 0.0});
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(int low_deg, std::vector<cd> coeffs)
    : low_deg_(low_deg), coeffs_(std::move(coeffs)) {
  std::size_t head = 0;
  while (head < coeffs_.size() && is_exact_zero(coeffs_[head])) ++head;
  if (head == coeffs_.size()) {
    coeffs_.clear();
    low_deg_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (tail > head && is_exact_zero(coeffs_[tail - 1])) --tail;
  if (head > 0 || tail < coeffs_.size()) {
    coeffs_ = std::vector<cd>(coeffs_.begin() + static_cast<std::ptrdiff_t>(head),
                              coeffs_.begin() + static_cast<std::ptrdiff_t>(tail));
    low_deg_ += static_cast<int>(head);
  }
}

LaurentPoly LaurentPoly::constant(cd c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(cd c, int degree) { return LaurentPoly(degree, {c}); }

cd LaurentPoly::coeff(int degree) const {
  if (is_zero() || degree < low_deg_ || degree > high_deg()) return cd{0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(degree - low_deg_)];
}

LaurentPoly lp_star(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<cd> c(p.size());
  auto src = p.coeffs();
  for (std::size_t j = 0; j < src.size(); ++j) {
    c[j] = std::conj(src[src.size() - 1 - j]);
  }
  return LaurentPoly(-p.high_deg(), std::move(c));
}

std::vector<cd> convolve(std::span<const cd> x, std::span<const cd> y, fft::Exec exec) {
  if (x.empty() || y.empty()) return {};
  const std::size_t out_len = x.size() + y.size() - 1;
  if (out_len < config::kFftCrossover) return schoolbook(x, y);

  const std::size_t n = fft::next_pow2(out_len);
  std::vector<cd> fx(n, cd{0.0, 0.0});
  std::vector<cd> fy(n, cd{0.0, 0.0});
  std::copy(x.begin(), x.end(), fx.begin());
  std::copy(y.begin(), y.end(), fy.begin());
  fft::fft_inplace(fx, exec);
  fft::fft_inplace(fy, exec);
  for (std::size_t i = 0; i < n; ++i) fx[i] *= fy[i];
  fft::ifft_inplace(fx, exec);
  fx.resize(out_len);
  return fx;
}

LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  return LaurentPoly(p.low_deg() + q.low_deg(), convolve(p.coeffs(), q.coeffs()));
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  const int low = std::min(p.low_deg(), q.low_deg());
  const int high = std::max(p.high_deg(), q.high_deg());
  std::vector<cd> c(static_cast<std::size_t>(high - low + 1), cd{0.0, 0.0});
  for (int d = p.low_deg(); d <= p.high_deg(); ++d) c[static_cast<std::size_t>(d - low)] += p.coeff(d);
  for (int d = q.low_deg(); d <= q.high_deg(); ++d) c[static_cast<std::size_t>(d - low)] += q.coeff(d);
  return LaurentPoly(low, std::move(c));
}

LaurentPoly lp_sub(const LaurentPoly& p, const LaurentPoly& q) {
  return lp_add(p, lp_scale(q, cd{-1.0, 0.0}));
}

LaurentPoly lp_scale(const LaurentPoly& p, cd factor) {
  if (p.is_zero() || is_exact_zero(factor)) return {};
  std::vector<cd> c(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : c) v *= factor;
  return LaurentPoly(p.low_deg(), std::move(c));
}

LaurentPoly lp_shift(const LaurentPoly& p, int k) {
  if (p.is_zero()) return {};
  return LaurentPoly(p.low_deg() + k, std::vector<cd>(p.coeffs().begin(), p.coeffs().end()));
}

std::vector<cd> lp_eval_circle(const LaurentPoly& p, std::size_t m, fft::Exec exec) {
  if (m == 0) throw InvalidInput("lp_eval_circle: grid size must be >= 1");
  if (p.is_zero()) return std::vector<cd>(m, cd{0.0, 0.0});

  if ((m & (m - 1)) == 0) {
    // Fold coefficients by degree mod m, then one inverse-sign DFT gives
    // p at all m-th roots of unity.
    std::vector<cd> folded(m, cd{0.0, 0.0});
    for (int d = p.low_deg(); d <= p.high_deg(); ++d) {
      const long long r = ((static_cast<long long>(d) % static_cast<long long>(m)) +
                           static_cast<long long>(m)) %
                          static_cast<long long>(m);
      folded[static_cast<std::size_t>(r)] += p.coeff(d);
    }
    fft::ifft_inplace(folded, exec);
    for (auto& v : folded) v *= static_cast<double>(m);
    return folded;
  }

  std::vector<cd> out(m);
  const std::ptrdiff_t mm = static_cast<std::ptrdiff_t>(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) \
    if (exec != fft::Exec::serial && m >= config::kGridParallelMin)
#endif
  for (std::ptrdiff_t j = 0; j < mm; ++j) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    out[static_cast<std::size_t>(j)] = lp_eval(p, std::polar(1.0, ang));
  }
  return out;
}

cd lp_eval(const LaurentPoly& p, cd z) {
  if (p.is_zero()) return cd{0.0, 0.0};
  // Horner over the stored window, then the z^low_deg prefactor.
  cd acc{0.0, 0.0};
  auto c = p.coeffs();
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
  int k = p.low_deg();
  cd zp{1.0, 0.0};
  cd base = k >= 0 ? z : cd{1.0, 0.0} / z;
  for (int e = std::abs(k); e > 0; e >>= 1, base *= base) {
    if (e & 1) zp *= base;
  }
  return acc * zp;
}

double lp_max_on_circle(const LaurentPoly& p, std::size_t m) {
  double best = 0.0;
  for (cd v : lp_eval_circle(p, m)) best = std::max(best, std::abs(v));
  return best;
}

double lp_norm2_sq(const LaurentPoly& p) {
  double s = 0.0;
  for (cd c : p.coeffs()) s += std::norm(c);
  return s;
}

double lp_coeff_dist(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) return 0.0;
  const int low = std::min(p.is_zero() ? q.low_deg() : p.low_deg(),
                           q.is_zero() ? p.low_deg() : q.low_deg());
  const int high = std::max(p.is_zero() ? q.high_deg() : p.high_deg(),
                            q.is_zero() ? p.high_deg() : q.high_deg());
  double best = 0.0;
  for (int d = low; d <= high; ++d) best = std::max(best, std::abs(p.coeff(d) - q.coeff(d)));
  return best;
}

}  // namespace nlfft
