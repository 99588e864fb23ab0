#include <doctest.h>

#include <random>

#include "nlfft/complement.hpp"
#include "nlfft/errors.hpp"
#include "nlfft/inverse.hpp"
#include "nlfft/sampling.hpp"

using namespace nlfft;

namespace {

double sup_diff(std::span<const cd> x, std::span<const cd> y) {
  REQUIRE(x.size() == y.size());
  double worst = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) worst = std::max(worst, std::abs(x[j] - y[j]));
  return worst;
}

std::vector<cd> window_a_star(const NlftPair& p, std::size_t n) {
  std::vector<cd> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = std::conj(p.a.coeff(-static_cast<int>(j)));
  return w;
}

std::vector<cd> window_b(const NlftPair& p, std::size_t n) {
  std::vector<cd> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = p.b.coeff(static_cast<int>(j));
  return w;
}

}  // namespace

TEST_SUITE("inverse") {
  TEST_CASE("rotor basics") {
    cd x{1, 0}, y{0, 0};
    GivensRotor{cd{0, 0}}.apply(x, y);
    CHECK(x == cd{1, 0});
    CHECK(y == cd{0, 0});

    x = cd{1, 0};
    y = cd{1, 0};
    GivensRotor{cd{1, 0}}.apply(x, y);
    CHECK(std::abs(x - cd{std::sqrt(2.0), 0}) < 1e-15);
    CHECK(std::abs(y) < 1e-15);
  }

  TEST_CASE("rotation preserves the Frobenius norm") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<cd> a(12), b(12);
    for (std::size_t j = 0; j < a.size(); ++j) {
      a[j] = cd{unit(rng), unit(rng)};
      b[j] = cd{unit(rng), unit(rng)};
    }
    double before = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) before += std::norm(a[j]) + std::norm(b[j]);
    givens_apply(a, b, GivensRotor{cd{0.3, -1.7}});
    double after = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) after += std::norm(a[j]) + std::norm(b[j]);
    CHECK(std::abs(std::sqrt(before) - std::sqrt(after)) < 1e-12);
  }

  TEST_CASE("stripping the identity pair") {
    const ComplexSequence g = layer_strip({LaurentPoly::constant(1.0), LaurentPoly{}});
    CHECK(g.empty());
  }

  TEST_CASE("stripping the two-coefficient pair recovers [1, 1]") {
    const NlftPair p{LaurentPoly(-1, {cd{-0.5, 0}, cd{0.5, 0}}),
                     LaurentPoly(0, {cd{0.5, 0}, cd{0.5, 0}})};
    const ComplexSequence g = layer_strip(p);
    REQUIRE(g.size() == 2);
    CHECK(std::abs(g.values[0] - cd{1, 0}) < 1e-14);
    CHECK(std::abs(g.values[1] - cd{1, 0}) < 1e-14);
  }

  TEST_CASE("single-step pair") {
    const NlftPair p{LaurentPoly::constant(std::sqrt(3.0) / 2.0),
                     LaurentPoly::constant(0.5)};
    const ComplexSequence g = layer_strip(p);
    REQUIRE(g.size() == 1);
    CHECK(std::abs(g.values[0] - cd{1.0 / std::sqrt(3.0), 0}) < 1e-14);
  }

  TEST_CASE("membership gate and normalization are enforced") {
    const NlftPair bad{LaurentPoly(-1, {cd{0.5, 0}, cd{0.5, 0}}),
                       LaurentPoly(0, {cd{0.5, 0}, cd{0.5, 0}})};
    CHECK_THROWS_AS(layer_strip(bad), InvalidInput);

    const NlftPair shifted{LaurentPoly(-1, {cd{-0.5, 0}, cd{0.5, 0}}),
                           LaurentPoly(1, {cd{0.5, 0}, cd{0.5, 0}})};
    CHECK_THROWS_AS(layer_strip(shifted), InvalidInput);
    CHECK_NOTHROW(inverse_nlft(shifted, InverseMethod::layer));
  }

  TEST_CASE("nonpositive pivot is a numerical failure") {
    CHECK_THROWS_AS(layer_strip_general({cd{-1, 0}, cd{0, 0}}, {cd{0.5, 0}, cd{0, 0}}, 2),
                    NumericalFailure);
  }

  TEST_CASE("generalized iteration agrees with stripping on image pairs") {
    const ComplexSequence g = random_sequence(9, 0.8, 21);
    const NlftPair p = forward_nlft_naive(g);
    const std::size_t n = p.b.size();
    const auto got = layer_strip_general(window_a_star(p, n), window_b(p, n), n);
    CHECK(sup_diff(got, layer_strip(p).values) < 1e-12);
  }

  TEST_CASE("generalized iteration on zero b emits zeros") {
    const auto g = layer_strip_general({cd{1, 0}, cd{0.25, 0}, cd{0.5, 0}},
                                       {cd{0, 0}, cd{0, 0}, cd{0, 0}}, 3);
    for (cd v : g) CHECK(v == cd{0, 0});
  }

  TEST_CASE("common scaling leaves the sequence unchanged") {
    const ComplexSequence g = random_sequence(8, 0.7, 33);
    const NlftPair p = forward_nlft_naive(g);
    const std::size_t n = p.b.size();
    auto a = window_a_star(p, n);
    auto b = window_b(p, n);
    const auto base = layer_strip_general(a, b, n);
    for (auto& v : a) v *= 2.5;
    for (auto& v : b) v *= 2.5;
    const auto scaled = layer_strip_general(a, b, n);
    CHECK(sup_diff(base, scaled) < 1e-13);
  }

  TEST_CASE("fast solver base case") {
    const auto r = inlfft({cd{std::sqrt(3.0) / 2.0, 0}}, {cd{0.5, 0}});
    REQUIRE(r.gamma.size() == 1);
    CHECK(std::abs(r.gamma[0] - cd{1.0 / std::sqrt(3.0), 0}) < 1e-15);
    CHECK(std::abs(r.transfer.eta.coeff(0) - cd{std::sqrt(3.0) / 2.0, 0}) < 1e-15);
    CHECK(std::abs(r.transfer.xi.coeff(0) - cd{0.5, 0}) < 1e-15);
  }

  TEST_CASE("fast solver on identity padded to length eight") {
    std::vector<cd> a(8, cd{0, 0}), b(8, cd{0, 0});
    a[0] = cd{1, 0};
    const auto r = inlfft(a, b);
    for (cd v : r.gamma) CHECK(std::abs(v) < 1e-15);
    CHECK(r.transfer.xi.is_zero());
    CHECK(std::abs(r.transfer.eta.coeff(0) - cd{1, 0}) < 1e-15);
  }

  TEST_CASE("fast solver matches stripping on a random pair") {
    const ComplexSequence g = random_sequence(16, 0.6, 55);
    const NlftPair p = forward_nlft_naive(g);
    const ComplexSequence via_layer = layer_strip(p);
    const ComplexSequence via_fast = inverse_nlft(p, InverseMethod::fast);
    CHECK(sup_diff(via_fast.values, via_layer.values) < 1e-10);
    CHECK(sup_diff(via_fast.values, g.values) < 1e-10);
  }

  TEST_CASE("methods agree across sizes including non-powers of two") {
    for (int n : {2, 3, 24, 100, 511, 1024}) {
      const ComplexSequence g = random_sequence_with_eta(n, 0.35, 900 + static_cast<std::uint64_t>(n));
      const NlftPair p = forward_nlft_fast(g);
      const ComplexSequence a = inverse_nlft(p, InverseMethod::layer);
      const ComplexSequence b = inverse_nlft(p, InverseMethod::fast);
      CHECK(a.support_offset == b.support_offset);
      CHECK(sup_diff(a.values, b.values) < 1e-9);
    }
  }

  TEST_CASE("leaf cutover is output-equivalent") {
    const ComplexSequence g = random_sequence_with_eta(200, 0.3, 4242);
    const NlftPair p = forward_nlft_fast(g);
    InverseFftOptions pure;
    InverseFftOptions leafy;
    leafy.leaf_size = config::kTunedInverseLeaf;
    const ComplexSequence a = inverse_nlft(p, InverseMethod::fast, config::kPairCheckTol, pure);
    const ComplexSequence b = inverse_nlft(p, InverseMethod::fast, config::kPairCheckTol, leafy);
    CHECK(sup_diff(a.values, b.values) < 1e-11);
  }

  TEST_CASE("roundtrip across sizes when a* is certified zero-free") {
    for (int n : {8, 64, 512}) {
      const ComplexSequence g = random_sequence_with_eta(n, 0.4, 7000 + static_cast<std::uint64_t>(n));
      const NlftPair p = forward_nlft_fast(g);
      REQUIRE(outer_closed_disk_certificate(lp_star(p.a)));
      CHECK(sup_diff(layer_strip(p).values, g.values) < 1e-8);
      CHECK(sup_diff(inverse_nlft(p, InverseMethod::fast).values, g.values) < 1e-8);
    }
  }

  TEST_CASE("stripping invariants along the run") {
    const ComplexSequence g = random_sequence(48, 0.9, 31337);
    const NlftPair p = forward_nlft_naive(g);
    std::vector<double> tops;
    std::vector<cd> gammas;
    layer_strip_observed(p, [&](int, cd gk, std::span<const cd> a_col,
                                std::span<const cd> b_col) {
      tops.push_back(a_col[0].real());
      gammas.push_back(gk);
      double frob = 0.0;
      double entry_cap = 0.0;
      for (std::size_t j = 0; j < a_col.size(); ++j) {
        frob += std::norm(a_col[j]) + std::norm(b_col[j]);
        entry_cap = std::max({entry_cap, std::abs(a_col[j]), std::abs(b_col[j])});
      }
      CHECK(std::sqrt(frob) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(entry_cap <= 1.0 + 1e-9);
    });
    for (std::size_t k = 1; k < tops.size(); ++k) {
      CHECK(tops[k] >= tops[k - 1] - 1e-12);  // pivots never decrease
    }
    // |gamma_k| <= (a00 * prod sqrt(1+|gamma_j|^2))^-1
    const double a00 = std::conj(p.a.coeff(0)).real();
    double running = a00;
    for (std::size_t k = 0; k < gammas.size(); ++k) {
      CHECK(std::abs(gammas[k]) <= 1.0 / running + 1e-9);
      running *= std::sqrt(1.0 + std::norm(gammas[k]));
    }
  }

  TEST_CASE("fast solver transfer pair matches the forward tree") {
    const ComplexSequence g = random_sequence(48, 0.7, 808);
    const NlftPair p = forward_nlft_naive(g);
    const std::size_t n = p.b.size();
    const auto r = inlfft(window_a_star(p, n), window_b(p, n));
    const TransferPair expect = transfer_of(r.gamma);
    CHECK(lp_coeff_dist(r.transfer.xi, expect.xi) < 1e-9);
    CHECK(lp_coeff_dist(r.transfer.eta, expect.eta) < 1e-9);
  }

  TEST_CASE("empty support means b = 0") {
    const ComplexSequence g = inverse_nlft({LaurentPoly::constant(1.0), LaurentPoly{}},
                                           InverseMethod::fast);
    CHECK(g.empty());
  }

  TEST_CASE("support offset is reattached") {
    ComplexSequence g = random_sequence(6, 0.5, 99);
    g.support_offset = -3;
    const NlftPair p = forward_nlft_naive(g);
    CHECK(p.b.low_deg() == -3);
    const ComplexSequence back = inverse_nlft(p, InverseMethod::fast);
    CHECK(back.support_offset == -3);
    CHECK(sup_diff(back.values, g.values) < 1e-10);
  }
}
