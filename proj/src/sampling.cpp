#include "nlfft/sampling.hpp"

#include <cmath>
#include <numbers>

#include "nlfft/errors.hpp"

namespace nlfft {
namespace {

cd disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double ang = 2.0 * std::numbers::pi * unit(rng);
  return std::polar(r, ang);
}

double b_sup(const ComplexSequence& g) {
  const NlftPair t = forward_nlft_fast(g);
  if (t.b.is_zero()) return 0.0;
  const std::size_t grid = fft::next_pow2(std::max<std::size_t>(64, 8 * t.b.size()));
  return lp_max_on_circle(t.b, grid);
}

ComplexSequence scaled(const ComplexSequence& g, double s) {
  ComplexSequence out = g;
  for (auto& v : out.values) v *= s;
  return out;
}

}  // namespace

ComplexSequence random_sequence(int n, double radius, std::uint64_t seed) {
  if (n <= 0) throw InvalidInput("random_sequence: n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<cd> vals(static_cast<std::size_t>(n));
  for (auto& v : vals) v = disk_point(rng, radius);
  while (vals.front() == cd{0.0, 0.0}) vals.front() = disk_point(rng, radius);
  while (vals.back() == cd{0.0, 0.0}) vals.back() = disk_point(rng, radius);
  return ComplexSequence(std::move(vals), 0);
}

ComplexSequence random_sequence_with_eta(int n, double eta, std::uint64_t seed) {
  if (eta <= 0.0 || eta >= 1.0) throw InvalidInput("random_sequence_with_eta: eta in (0,1)");
  const double target = 1.0 - eta;
  ComplexSequence base = random_sequence(n, 1.0, seed);

  // The sup of b grows monotonically with a uniform scaling of the
  // coefficients in the regime of interest; bracket then bisect.
  double lo = 0.0;
  double hi = 1.0 / std::sqrt(static_cast<double>(n));
  while (b_sup(scaled(base, hi)) < target && hi < 64.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double sup = b_sup(scaled(base, mid));
    if (std::abs(sup - target) < 5e-3) return scaled(base, mid);
    (sup < target ? lo : hi) = mid;
  }
  return scaled(base, 0.5 * (lo + hi));
}

QspTarget random_qsp_target(int n, double max_abs, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("random_qsp_target: degree must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  QspTarget f;
  f.cheb.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = n % 2; k <= n; k += 2) f.cheb[static_cast<std::size_t>(k)] = unit(rng);
  if (f.cheb.back() == 0.0) f.cheb.back() = 0.5;
  const double sup = 1.0 - qsp_target_margin(f);
  for (auto& c : f.cheb) c *= max_abs / sup;
  return f;
}

GqspTarget random_gqsp_target(int n, double max_abs, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("random_gqsp_target: degree must be >= 0");
  std::mt19937_64 rng(seed);
  GqspTarget q;
  q.coeffs.assign(static_cast<std::size_t>(n) + 1, cd{0.0, 0.0});
  for (auto& c : q.coeffs) c = disk_point(rng, 1.0);
  while (q.coeffs.back() == cd{0.0, 0.0}) q.coeffs.back() = disk_point(rng, 1.0);
  const double sup = 1.0 - gqsp_target_margin(q);
  for (auto& c : q.coeffs) c *= max_abs / sup;
  return q;
}

LaurentPoly random_real_b(int n, double max_abs, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("random_real_b: need n >= 1 coefficients");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  LaurentPoly b;
  while (b.is_zero()) {
    std::vector<cd> coeffs(static_cast<std::size_t>(n));
    for (auto& c : coeffs) c = cd{unit(rng), 0.0};
    b = LaurentPoly(0, std::move(coeffs));
  }
  const std::size_t grid = fft::next_pow2(std::max<std::size_t>(64, 4 * b.size()));
  return lp_scale(b, cd{max_abs / lp_max_on_circle(b, grid), 0.0});
}

}  // namespace nlfft
