// Kernel-level benchmark: serial vs OpenMP FFT, grid evaluators, and the
// two inverse solvers on a shared input. Complements `nlfft bench`, which
// times the solver pair end to end.

#include <chrono>
#include <iostream>
#include <random>

#include "nlfft/fft.hpp"
#include "nlfft/inverse.hpp"
#include "nlfft/qsp.hpp"
#include "nlfft/sampling.hpp"

using namespace nlfft;
using Clock = std::chrono::steady_clock;

namespace {

double time_once(const std::function<void()>& fn) {
  const auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double time_best(const std::function<void()>& fn, int reps = 5) {
  double best = 1e30;
  for (int i = 0; i < reps; ++i) best = std::min(best, time_once(fn));
  return best;
}

}  // namespace

int main() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  std::cout << "kernel,n,serial_s,parallel_s\n";
  for (std::size_t n = 1 << 12; n <= (1 << 17); n <<= 1) {
    std::vector<fft::cd> base(n);
    for (auto& v : base) v = fft::cd{unit(rng), unit(rng)};
    const double ts = time_best([&] {
      auto copy = base;
      fft::fft_serial_inplace(copy);
    });
    const double tp = time_best([&] {
      auto copy = base;
      fft::fft_parallel_inplace(copy);
    });
    std::cout << "fft," << n << ',' << ts << ',' << tp << '\n';
  }

  {
    PhaseFactorSet phases;
    phases.kind = PhaseFactorSet::Kind::qsp;
    phases.psi.resize(257);
    for (auto& p : phases.psi) p = 0.3 * unit(rng);
    std::vector<double> xs(4096);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      xs[j] = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(xs.size() - 1);
    }
#ifdef _OPENMP
    const double tp = time_best([&] { qsp_evaluate(phases, xs); });
#else
    const double tp = -1.0;
#endif
    std::vector<double> one(1);
    double ts = 0.0;
    ts = time_best([&] {
      for (double x : xs) {
        one[0] = x;
        qsp_evaluate(phases, one);
      }
    });
    std::cout << "qsp_eval,4096," << ts << ',' << tp << '\n';
  }

  std::cout << "solver,n,layer_s,fast_s\n";
  for (int n = 1 << 10; n <= (1 << 14); n <<= 1) {
    const ComplexSequence g = random_sequence_with_eta(n, 0.2, 11 + static_cast<std::uint64_t>(n));
    const NlftPair pair = forward_nlft_fast(g);
    const double tl = time_best([&] { inverse_nlft(pair, InverseMethod::layer); }, 3);
    const double tf = time_best([&] { inverse_nlft(pair, InverseMethod::fast); }, 3);
    std::cout << "inverse," << n << ',' << tl << ',' << tf << '\n';
  }
  return 0;
}
