#include "nlfft/fft.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

#include "nlfft/config.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nlfft::fft {
namespace {

// Twiddle table for a transform of length n: w[j] = exp(-2*pi*i*j/n),
// j < n/2. Cached per thread keyed by size.
const std::vector<cd>& twiddles(std::size_t n) {
  thread_local std::size_t cached_n = 0;
  thread_local std::vector<cd> table;
  if (cached_n != n) {
    table.resize(n / 2);
    const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n / 2; ++j) {
      table[j] = std::polar(1.0, step * static_cast<double>(j));
    }
    cached_n = n;
  }
  return table;
}

void bit_reverse_permute(std::vector<cd>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

template <bool Parallel>
void transform(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  assert((n & (n - 1)) == 0 && "transform length must be a power of two");
  if (n <= 1) return;
  bit_reverse_permute(a);
  const std::vector<cd>& w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(n >> 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
    for (std::ptrdiff_t p = 0; p < pairs; ++p) {
      const std::size_t blk = static_cast<std::size_t>(p) / half;
      const std::size_t j = static_cast<std::size_t>(p) % half;
      const std::size_t i = blk * len + j;
      cd tw = w[j * stride];
      if (inverse) tw = std::conj(tw);
      const cd u = a[i];
      const cd v = a[i + half] * tw;
      a[i] = u + v;
      a[i + half] = u - v;
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= scale;
  }
}

bool use_parallel(std::size_t n, Exec exec) {
  switch (exec) {
    case Exec::serial:
      return false;
    case Exec::parallel:
      return true;
    case Exec::automatic:
      break;
  }
#ifdef _OPENMP
  return n >= config::kFftParallelMin && omp_get_max_threads() > 1;
#else
  (void)n;
  return false;
#endif
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_serial_inplace(std::vector<cd>& data) { transform<false>(data, false); }
void ifft_serial_inplace(std::vector<cd>& data) { transform<false>(data, true); }
void fft_parallel_inplace(std::vector<cd>& data) { transform<true>(data, false); }
void ifft_parallel_inplace(std::vector<cd>& data) { transform<true>(data, true); }

void fft_inplace(std::vector<cd>& data, Exec exec) {
  if (use_parallel(data.size(), exec)) {
    fft_parallel_inplace(data);
  } else {
    fft_serial_inplace(data);
  }
}

void ifft_inplace(std::vector<cd>& data, Exec exec) {
  if (use_parallel(data.size(), exec)) {
    ifft_parallel_inplace(data);
  } else {
    ifft_serial_inplace(data);
  }
}

std::vector<cd> dft_reference(const std::vector<cd>& data, bool inverse) {
  const std::size_t n = data.size();
  std::vector<cd> out(n);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    cd acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ang =
          sign * 2.0 * std::numbers::pi * static_cast<double>(j * k % n) / static_cast<double>(n);
      acc += data[j] * std::polar(1.0, ang);
    }
    out[k] = inverse ? acc / static_cast<double>(n) : acc;
  }
  return out;
}

}  // namespace nlfft::fft
