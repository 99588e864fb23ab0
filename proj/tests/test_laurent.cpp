#include <doctest.h>

#include <random>

#include "nlfft/errors.hpp"
#include "nlfft/laurent.hpp"
#include "oracles.hpp"

using namespace nlfft;

namespace {

LaurentPoly random_poly(int low, int len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<cd> c(static_cast<std::size_t>(len));
  for (auto& v : c) v = cd{unit(rng), unit(rng)};
  return LaurentPoly(low, std::move(c));
}

double rel_coeff_err(const LaurentPoly& got, const oracle::MapPoly& expect) {
  double scale = 0.0;
  for (const auto& [d, c] : expect) scale = std::max(scale, std::abs(c));
  return oracle::dist(expect, got) / std::max(scale, 1.0);
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("construction trims exact zeros only") {
    LaurentPoly p(-2, {cd{0, 0}, cd{1, 0}, cd{0, 0}, cd{2, 0}, cd{0, 0}});
    CHECK(p.low_deg() == -1);
    CHECK(p.high_deg() == 1);
    CHECK(p.coeff(0) == cd{0, 0});  // interior zero preserved

    LaurentPoly tiny(0, {cd{1e-300, 0}});
    CHECK(!tiny.is_zero());  // numerically tiny is not zero

    LaurentPoly zero(5, {cd{0, 0}, cd{0, 0}});
    CHECK(zero.is_zero());
    CHECK(zero.low_deg() == 0);
  }

  TEST_CASE("conjugate-reflection on simple inputs") {
    const LaurentPoly c = LaurentPoly::constant(cd{2.0, -3.0});
    CHECK(lp_star(c).coeff(0) == cd{2.0, 3.0});

    const LaurentPoly iz = LaurentPoly::monomial(cd{0.0, 1.0}, 1);
    const LaurentPoly s = lp_star(iz);
    CHECK(s.low_deg() == -1);
    CHECK(s.coeff(-1) == cd{0.0, -1.0});

    const LaurentPoly p(0, {cd{1, 0}, cd{2, 0}});  // 1 + 2z
    const LaurentPoly q = lp_star(p);
    CHECK(q.coeff(0) == cd{1, 0});
    CHECK(q.coeff(-1) == cd{2, 0});
  }

  TEST_CASE("star is an exact involution") {
    const LaurentPoly p = random_poly(-3, 9, 42);
    CHECK(lp_star(lp_star(p)) == p);
  }

  TEST_CASE("star distributes over products") {
    const LaurentPoly p = random_poly(-2, 40, 1);
    const LaurentPoly q = random_poly(1, 70, 2);
    const LaurentPoly lhs = lp_star(lp_mul(p, q));
    const LaurentPoly rhs = lp_mul(lp_star(p), lp_star(q));
    CHECK(lp_coeff_dist(lhs, rhs) < 1e-12);
  }

  TEST_CASE("products on known inputs") {
    const LaurentPoly one_plus(0, {cd{1, 0}, cd{1, 0}});
    const LaurentPoly one_minus(0, {cd{1, 0}, cd{-1, 0}});
    const LaurentPoly prod = lp_mul(one_plus, one_minus);
    CHECK(prod.coeff(0) == cd{1, 0});
    CHECK(prod.coeff(1) == cd{0, 0});
    CHECK(prod.coeff(2) == cd{-1, 0});

    CHECK(lp_mul(LaurentPoly::monomial(1.0, -1), LaurentPoly::monomial(1.0, 1)) ==
          LaurentPoly::constant(1.0));

    // ((1+z)/2)((1+1/z)/2) = (2 + z + 1/z)/4
    const LaurentPoly half(0, {cd{0.5, 0}, cd{0.5, 0}});
    const LaurentPoly sym = lp_mul(half, lp_star(half));
    CHECK(std::abs(sym.coeff(0) - cd{0.5, 0}) < 1e-15);
    CHECK(std::abs(sym.coeff(1) - cd{0.25, 0}) < 1e-15);
    CHECK(std::abs(sym.coeff(-1) - cd{0.25, 0}) < 1e-15);
  }

  TEST_CASE("fft and schoolbook products agree") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
      std::uniform_int_distribution<int> len(1, 257);
      const LaurentPoly p = random_poly(-5, len(rng), 100 + static_cast<std::uint64_t>(trial));
      const LaurentPoly q = random_poly(2, len(rng), 200 + static_cast<std::uint64_t>(trial));
      const auto expect = oracle::mul(oracle::from_laurent(p), oracle::from_laurent(q));
      CHECK(rel_coeff_err(lp_mul(p, q), expect) < 1e-12);
    }
  }

  TEST_CASE("shift moves degrees") {
    CHECK(lp_shift(LaurentPoly::constant(1.0), 3) == LaurentPoly::monomial(1.0, 3));
    const LaurentPoly p(-1, {cd{1, 0}, cd{0, 0}, cd{1, 0}});  // z^-1 + z
    const LaurentPoly s = lp_shift(p, 1);
    CHECK(s.coeff(0) == cd{1, 0});
    CHECK(s.coeff(2) == cd{1, 0});
    const LaurentPoly b(1, {cd{2, 0}, cd{3, 0}});
    CHECK(lp_shift(b, -1).low_deg() == 0);
  }

  TEST_CASE("circle evaluation") {
    const auto ones = lp_eval_circle(LaurentPoly::constant(1.0), 4);
    for (cd v : ones) CHECK(std::abs(v - cd{1, 0}) < 1e-15);

    const auto fourth = lp_eval_circle(LaurentPoly::monomial(1.0, 1), 4);
    CHECK(std::abs(fourth[0] - cd{1, 0}) < 1e-15);
    CHECK(std::abs(fourth[1] - cd{0, 1}) < 1e-15);
    CHECK(std::abs(fourth[2] - cd{-1, 0}) < 1e-15);
    CHECK(std::abs(fourth[3] - cd{0, -1}) < 1e-15);

    const LaurentPoly half(0, {cd{0.5, 0}, cd{0.5, 0}});
    const auto two = lp_eval_circle(half, 2);
    CHECK(std::abs(two[0] - cd{1, 0}) < 1e-15);
    CHECK(std::abs(two[1]) < 1e-15);

    // non-power-of-two grids take the direct path; compare against FFT grid
    const LaurentPoly p = random_poly(-4, 13, 5);
    const auto direct = lp_eval_circle(p, 12);
    for (std::size_t j = 0; j < 12; ++j) {
      const cd z = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / 12.0);
      CHECK(std::abs(direct[j] - lp_eval(p, z)) < 1e-12);
    }
  }

  TEST_CASE("star preserves modulus on the circle") {
    const LaurentPoly p = random_poly(-6, 30, 77);
    const auto v1 = lp_eval_circle(p, 64);
    const auto v2 = lp_eval_circle(lp_star(p), 64);
    for (std::size_t j = 0; j < 64; ++j) {
      CHECK(std::abs(std::abs(v1[j]) - std::abs(v2[j])) < 1e-12);
    }
  }

  TEST_CASE("linear operations") {
    const LaurentPoly p = random_poly(-2, 6, 11);
    const LaurentPoly q = random_poly(-4, 10, 12);
    CHECK(lp_coeff_dist(lp_sub(lp_add(p, q), q), p) < 1e-15);
    CHECK(lp_coeff_dist(lp_scale(p, cd{2, 1}),
                        lp_add(p, lp_add(p, lp_scale(p, cd{0, 1})))) < 1e-15);
    CHECK(lp_add(p, lp_scale(p, cd{-1, 0})).is_zero());
    CHECK(lp_eval_circle(LaurentPoly{}, 8) == std::vector<cd>(8, cd{0, 0}));
  }

  TEST_CASE("grid size must be positive") {
    CHECK_THROWS_AS(lp_eval_circle(LaurentPoly::constant(1.0), 0), InvalidInput);
  }
}
