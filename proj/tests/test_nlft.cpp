#include <doctest.h>

#include <random>

#include "nlfft/nlft.hpp"
#include "oracles.hpp"

using namespace nlfft;

namespace {

ComplexSequence random_gamma(int n, double bound, std::uint64_t seed, int offset = 0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<cd> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = bound * cd{unit(rng), unit(rng)} / std::sqrt(2.0);
  return ComplexSequence(std::move(v), offset);
}

double pair_dist(const NlftPair& x, const NlftPair& y) {
  return std::max(lp_coeff_dist(x.a, y.a), lp_coeff_dist(x.b, y.b));
}

}  // namespace

TEST_SUITE("nlft") {
  TEST_CASE("empty sequence transforms to the identity") {
    const NlftPair t = forward_nlft_naive(ComplexSequence{});
    CHECK(t.a == LaurentPoly::constant(1.0));
    CHECK(t.b.is_zero());
    const NlftPair f = forward_nlft_fast(ComplexSequence{});
    CHECK(f.a == LaurentPoly::constant(1.0));
    CHECK(f.b.is_zero());
  }

  TEST_CASE("single unit coefficient") {
    const ComplexSequence g({cd{1, 0}}, 0);
    const NlftPair t = forward_nlft_naive(g);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(t.a.coeff(0) - cd{r, 0}) < 1e-15);
    CHECK(std::abs(t.b.coeff(0) - cd{r, 0}) < 1e-15);
    CHECK(t.a.size() == 1);
    CHECK(t.b.size() == 1);
  }

  TEST_CASE("two unit coefficients (frozen by hand product)") {
    const ComplexSequence g({cd{1, 0}, cd{1, 0}}, 0);
    const NlftPair t = forward_nlft_naive(g);
    // a = (1 - 1/z)/2, b = (1 + z)/2
    CHECK(std::abs(t.a.coeff(0) - cd{0.5, 0}) < 1e-15);
    CHECK(std::abs(t.a.coeff(-1) - cd{-0.5, 0}) < 1e-15);
    CHECK(std::abs(t.b.coeff(0) - cd{0.5, 0}) < 1e-15);
    CHECK(std::abs(t.b.coeff(1) - cd{0.5, 0}) < 1e-15);

    const auto ref = oracle::forward_reference(g.values, 0);
    CHECK(oracle::dist(ref.a, t.a) < 1e-15);
    CHECK(oracle::dist(ref.b, t.b) < 1e-15);
  }

  TEST_CASE("naive path matches the matrix-product reference") {
    for (int n : {3, 7, 16}) {
      const ComplexSequence g = random_gamma(n, 1.5, 10 + static_cast<std::uint64_t>(n), -2);
      const NlftPair t = forward_nlft_naive(g);
      const auto ref = oracle::forward_reference(g.values, g.support_offset);
      CHECK(oracle::dist(ref.a, t.a) < 1e-13);
      CHECK(oracle::dist(ref.b, t.b) < 1e-13);
      // lower row is determined by the upper one
      CHECK(oracle::dist(ref.d, lp_star(t.a)) < 1e-13);
    }
  }

  TEST_CASE("fast path equals naive path") {
    for (int n : {1, 2, 3, 13, 64, 257, 1024}) {
      const ComplexSequence g =
          random_gamma(n, 1.0, 1000 + static_cast<std::uint64_t>(n), n % 3 - 1);
      const NlftPair naive = forward_nlft_naive(g);
      const NlftPair fast = forward_nlft_fast(g);
      CHECK(pair_dist(naive, fast) < 1e-10);
    }
  }

  TEST_CASE("zero entries act as identity factors") {
    ComplexSequence g({cd{0, 0}, cd{1, 0}, cd{0, 0}, cd{1, 0}, cd{0, 0}}, 0);
    const NlftPair a = forward_nlft_naive(g);
    const NlftPair b = forward_nlft_fast(g);
    CHECK(pair_dist(a, b) < 1e-14);
    const ComplexSequence zeros({cd{0, 0}, cd{0, 0}, cd{0, 0}}, 0);
    const NlftPair z = forward_nlft_fast(zeros);
    CHECK(z.a == LaurentPoly::constant(1.0));
    CHECK(z.b.is_zero());
  }

  TEST_CASE("membership report on known pairs") {
    CHECK(pair_check({LaurentPoly::constant(1.0), LaurentPoly{}}).pass);
    CHECK(pair_check({LaurentPoly::constant(1.0), LaurentPoly{}}).residual == 0.0);

    const NlftPair good{LaurentPoly(-1, {cd{-0.5, 0}, cd{0.5, 0}}),
                        LaurentPoly(0, {cd{0.5, 0}, cd{0.5, 0}})};
    CHECK(pair_check(good).pass);

    // aa* + bb* = 1 + (z + 1/z)/2 for a = (1 + 1/z)/2
    const NlftPair bad{LaurentPoly(-1, {cd{0.5, 0}, cd{0.5, 0}}),
                       LaurentPoly(0, {cd{0.5, 0}, cd{0.5, 0}})};
    const PairReport rep = pair_check(bad);
    CHECK(!rep.pass);
    CHECK(rep.residual == doctest::Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("forward output passes the membership check") {
    for (int n : {4, 50, 256}) {
      const ComplexSequence g = random_gamma(n, 2.0, 5 + static_cast<std::uint64_t>(n));
      const PairReport rep = pair_check(forward_nlft_naive(g), 1e-10);
      CHECK(rep.pass);
    }
  }

  TEST_CASE("top coefficient of a* is the product formula") {
    const ComplexSequence g = random_gamma(40, 2.0, 31);
    const NlftPair t = forward_nlft_naive(g);
    double expect = 1.0;
    for (cd v : g.values) expect /= std::sqrt(1.0 + std::norm(v));
    CHECK(std::abs(std::conj(t.a.coeff(0)) - cd{expect, 0.0}) < 1e-10);
  }

  TEST_CASE("coefficient norms sum to one") {
    const ComplexSequence g = random_gamma(64, 2.0, 77);
    const NlftPair t = forward_nlft_naive(g);
    CHECK(lp_norm2_sq(t.a) + lp_norm2_sq(t.b) == doctest::Approx(1.0).epsilon(1e-10));
  }

  TEST_CASE("crosscorrelation identity") {
    const int n = 48;
    const ComplexSequence g = random_gamma(n, 1.5, 123);
    const NlftPair t = forward_nlft_naive(g);
    // coefficient autocorrelations of the two windows sum to a unit impulse
    std::vector<cd> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(j)] = t.a.coeff(-j);
      b[static_cast<std::size_t>(j)] = t.b.coeff(j);
    }
    for (int lag = -(n - 1); lag <= n - 1; ++lag) {
      cd acc{0, 0};
      for (int k = 0; k < n; ++k) {
        const int k2 = k + lag;
        if (k2 < 0 || k2 >= n) continue;
        acc += a[static_cast<std::size_t>(k)] * std::conj(a[static_cast<std::size_t>(k2)]) +
               b[static_cast<std::size_t>(k)] * std::conj(b[static_cast<std::size_t>(k2)]);
      }
      CHECK(std::abs(acc - (lag == 0 ? cd{1, 0} : cd{0, 0})) < 1e-10);
    }
  }

  TEST_CASE("circle margin estimates") {
    CHECK(eta_of({LaurentPoly::constant(1.0), LaurentPoly{}}) == 1.0);
    const NlftPair half_pair{LaurentPoly::constant(std::sqrt(0.75)),
                             LaurentPoly::constant(0.5)};
    CHECK(eta_of(half_pair) == doctest::Approx(0.5).epsilon(1e-12));
    const NlftPair edge{LaurentPoly(-1, {cd{-0.5, 0}, cd{0.5, 0}}),
                        LaurentPoly(0, {cd{0.5, 0}, cd{0.5, 0}})};
    CHECK(eta_of(edge) == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("support shift") {
    const NlftPair p{LaurentPoly::constant(std::sqrt(0.75)), LaurentPoly::constant(0.5)};
    const NlftPair up = shift_support(p, 3);
    CHECK(up.b.low_deg() == 3);
    CHECK(up.a == p.a);
    const NlftPair back = shift_support(up, -3);
    CHECK(back.b == p.b);
    CHECK(pair_dist(shift_support(p, 0), p) == 0.0);
  }

  TEST_CASE("strict sequences validate endpoints") {
    CHECK_THROWS(ComplexSequence({cd{0, 0}, cd{1, 0}}, 0, true));
    CHECK_NOTHROW(ComplexSequence({cd{1, 0}, cd{0, 0}, cd{1, 0}}, -1, true));
  }
}
