#pragma once

// Test-only reference implementations, deliberately independent of the
// library's computation paths: exponent-map polynomial arithmetic and a
// literal 2x2 matrix product for the transform. Everything here is O(n^2)
// or worse and used only to freeze expected values.

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "nlfft/laurent.hpp"

namespace oracle {

using cd = std::complex<double>;
using MapPoly = std::map<int, cd>;  // exponent -> coefficient

inline MapPoly from_laurent(const nlfft::LaurentPoly& p) {
  MapPoly m;
  for (int d = p.low_deg(); !p.is_zero() && d <= p.high_deg(); ++d) {
    const cd c = p.coeff(d);
    if (c != cd{0.0, 0.0}) m[d] = c;
  }
  return m;
}

inline MapPoly add(const MapPoly& x, const MapPoly& y) {
  MapPoly out = x;
  for (const auto& [d, c] : y) out[d] += c;
  return out;
}

inline MapPoly scale(const MapPoly& x, cd f) {
  MapPoly out;
  for (const auto& [d, c] : x) out[d] = c * f;
  return out;
}

inline MapPoly mul(const MapPoly& x, const MapPoly& y) {
  MapPoly out;
  for (const auto& [dx, cx] : x) {
    for (const auto& [dy, cy] : y) out[dx + dy] += cx * cy;
  }
  return out;
}

inline MapPoly star(const MapPoly& x) {
  MapPoly out;
  for (const auto& [d, c] : x) out[-d] = std::conj(c);
  return out;
}

inline double dist(const MapPoly& x, const MapPoly& y) {
  double worst = 0.0;
  MapPoly diff = add(x, scale(y, cd{-1.0, 0.0}));
  for (const auto& [d, c] : diff) worst = std::max(worst, std::abs(c));
  return worst;
}

inline double dist(const MapPoly& x, const nlfft::LaurentPoly& y) {
  return dist(x, from_laurent(y));
}

struct MapMatrix {
  MapPoly a, b, c, d;  // [[a, b], [c, d]]
};

inline MapMatrix matmul(const MapMatrix& x, const MapMatrix& y) {
  return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
          add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

// Literal product of the elementary factors, all four entries carried.
inline MapMatrix forward_reference(const std::vector<cd>& gamma, int offset) {
  MapMatrix acc{{{0, cd{1.0, 0.0}}}, {}, {}, {{0, cd{1.0, 0.0}}}};
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    const cd g = gamma[j];
    const int k = offset + static_cast<int>(j);
    const double s = 1.0 / std::sqrt(1.0 + std::norm(g));
    MapMatrix factor;
    factor.a = {{0, cd{s, 0.0}}};
    factor.d = {{0, cd{s, 0.0}}};
    if (g != cd{0.0, 0.0}) {
      factor.b = {{k, g * s}};
      factor.c = {{-k, -std::conj(g) * s}};
    }
    acc = matmul(acc, factor);
  }
  return acc;
}

inline MapPoly one() { return {{0, cd{1.0, 0.0}}}; }

}  // namespace oracle
