#include <doctest.h>

#include <random>

#include "nlfft/fft.hpp"

using namespace nlfft;
using fft::cd;

namespace {

std::vector<cd> random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<cd> v(n);
  for (auto& x : v) x = cd{unit(rng), unit(rng)};
  return v;
}

double max_diff(const std::vector<cd>& x, const std::vector<cd>& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

}  // namespace

TEST_SUITE("fft") {
  TEST_CASE("matches the direct transform") {
    for (std::size_t n : {1u, 2u, 8u, 64u, 256u}) {
      auto data = random_signal(n, 10 + n);
      auto expect = fft::dft_reference(data, false);
      auto got = data;
      fft::fft_serial_inplace(got);
      CHECK(max_diff(got, expect) < 1e-10);
    }
  }

  TEST_CASE("parallel path equals serial path") {
    for (std::size_t n : {4u, 128u, 4096u}) {
      auto data = random_signal(n, 99 + n);
      auto s = data;
      auto p = data;
      fft::fft_serial_inplace(s);
      fft::fft_parallel_inplace(p);
      CHECK(max_diff(s, p) == 0.0);  // same arithmetic, different scheduling

      fft::ifft_serial_inplace(s);
      fft::ifft_parallel_inplace(p);
      CHECK(max_diff(s, data) < 1e-12);
      CHECK(max_diff(p, data) < 1e-12);
    }
  }

  TEST_CASE("next_pow2") {
    CHECK(fft::next_pow2(1) == 1);
    CHECK(fft::next_pow2(2) == 2);
    CHECK(fft::next_pow2(3) == 4);
    CHECK(fft::next_pow2(1025) == 2048);
  }
}
