#include "nlfft/qsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nlfft/complement.hpp"
#include "nlfft/config.hpp"
#include "nlfft/errors.hpp"
#include "nlfft/inverse.hpp"

namespace nlfft {
namespace {

struct Mat2 {
  cd m00, m01, m10, m11;

  Mat2 operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
  }
};

Mat2 z_rotation(double psi) {
  const cd e = std::polar(1.0, psi);
  return {e, 0.0, 0.0, std::conj(e)};
}

Mat2 signal_unitary(double x) {
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  return {cd{x, 0.0}, cd{0.0, s}, cd{0.0, s}, cd{x, 0.0}};
}

Mat2 two_parameter_rotor(double psi, double phi) {
  const double c = std::cos(psi), s = std::sin(psi);
  return {cd{c, 0.0}, std::polar(s, phi), -std::polar(s, -phi), cd{c, 0.0}};
}

bool near_zero(double v) { return std::abs(v) <= 1e-12; }

// Chebyshev extrema grid including both endpoints.
std::vector<double> chebyshev_grid(std::size_t points) {
  std::vector<double> xs(points);
  for (std::size_t j = 0; j < points; ++j) {
    xs[j] = std::cos(std::numbers::pi * static_cast<double>(j) /
                     static_cast<double>(points - 1));
  }
  return xs;
}

std::vector<cd> circle_grid(std::size_t points) {
  std::vector<cd> zs(points);
  for (std::size_t j = 0; j < points; ++j) {
    zs[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                static_cast<double>(points));
  }
  return zs;
}

// Recovered sequences must live on [0, n]; re-expresses one as a dense
// window of that length.
std::vector<cd> dense_window(const ComplexSequence& g, std::size_t len) {
  if (g.support_offset < 0) throw InvalidInput("sequence support must start at index >= 0");
  std::vector<cd> w(len, cd{0.0, 0.0});
  for (std::size_t j = 0; j < g.size(); ++j) {
    const std::size_t idx = static_cast<std::size_t>(g.support_offset) + j;
    if (idx >= len) throw InvalidInput("sequence support exceeds the target degree");
    w[idx] = g.values[j];
  }
  return w;
}

void gate_imaginary(std::vector<cd>& w) {
  for (auto& v : w) {
    if (std::abs(v.imag()) > config::kImagGate) {
      std::ostringstream os;
      os << "recovered sequence has imaginary part " << v.imag()
         << " beyond the gate " << config::kImagGate;
      throw NumericalFailure(os.str());
    }
    v = cd{v.real(), 0.0};
  }
}

}  // namespace

int QspTarget::degree() const {
  int deg = 0;
  for (std::size_t k = 0; k < cheb.size(); ++k) {
    if (cheb[k] != 0.0) deg = static_cast<int>(k);
  }
  return deg;
}

int GqspTarget::degree() const {
  int deg = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != cd{0.0, 0.0}) deg = static_cast<int>(k);
  }
  return deg;
}

double chebyshev_eval(std::span<const double> cheb, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = cheb.size(); k-- > 1;) {
    const double t = 2.0 * x * b1 - b2 + cheb[k];
    b2 = b1;
    b1 = t;
  }
  return (cheb.empty() ? 0.0 : cheb[0]) + x * b1 - b2;
}

LaurentPoly chebyshev_to_b(const QspTarget& f, int n) {
  if (n < 0) throw InvalidInput("chebyshev_to_b: negative degree");
  if (f.degree() > n) throw InvalidInput("chebyshev_to_b: target degree exceeds n");
  for (std::size_t k = 0; k < f.cheb.size(); ++k) {
    if (!near_zero(f.cheb[k]) && (static_cast<int>(k) % 2) != (n % 2)) {
      std::ostringstream os;
      os << "chebyshev_to_b: coefficient of T_" << k << " breaks the parity of degree " << n;
      throw InvalidInput(os.str());
    }
  }
  if (qsp_target_margin(f) < -1e-12) {
    throw InvalidInput("chebyshev_to_b: target exceeds 1 in sup-norm");
  }

  std::vector<cd> coeffs(static_cast<std::size_t>(n) + 1, cd{0.0, 0.0});
  for (std::size_t k = 0; k < f.cheb.size(); ++k) {
    if (f.cheb[k] == 0.0) continue;
    const int kk = static_cast<int>(k);
    coeffs[static_cast<std::size_t>((n + kk) / 2)] += 0.5 * f.cheb[k];
    coeffs[static_cast<std::size_t>((n - kk) / 2)] += 0.5 * f.cheb[k];
  }
  return LaurentPoly(0, std::move(coeffs));
}

PhaseFactorSet qsp_phases_from_gamma(const ComplexSequence& g) {
  std::vector<cd> w = dense_window(
      g, static_cast<std::size_t>(g.support_offset) + g.size());
  gate_imaginary(w);
  PhaseFactorSet out;
  out.kind = PhaseFactorSet::Kind::qsp;
  out.psi.resize(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.psi[k] = std::atan(w[k].real());
  return out;
}

PhaseFactorSet gqsp_phases_from_gamma(const ComplexSequence& g) {
  const std::vector<cd> w = dense_window(
      g, static_cast<std::size_t>(g.support_offset) + g.size());
  PhaseFactorSet out;
  out.kind = PhaseFactorSet::Kind::gqsp;
  out.psi.resize(w.size());
  out.phi.resize(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    out.psi[k] = std::atan(std::abs(w[k]));
    out.phi[k] = (w[k] == cd{0.0, 0.0}) ? 0.0 : std::arg(w[k]);
  }
  return out;
}

QspSignalValues qsp_evaluate(const PhaseFactorSet& phases, std::span<const double> xs) {
  if (phases.kind != PhaseFactorSet::Kind::qsp) {
    throw InvalidInput("qsp_evaluate: wrong phase kind");
  }
  if (phases.psi.empty()) throw InvalidInput("qsp_evaluate: empty phase sequence");
  for (double x : xs) {
    if (std::abs(x) > 1.0 + 1e-12) throw InvalidInput("qsp_evaluate: sample outside [-1, 1]");
  }
  QspSignalValues out;
  out.u.resize(xs.size());
  out.v.resize(xs.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(xs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (xs.size() >= config::kGridParallelMin)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const double x = std::clamp(xs[static_cast<std::size_t>(i)], -1.0, 1.0);
    Mat2 u = z_rotation(phases.psi[0]);
    const Mat2 w = signal_unitary(x);
    for (std::size_t k = 1; k < phases.psi.size(); ++k) {
      u = u * w * z_rotation(phases.psi[k]);
    }
    out.u[static_cast<std::size_t>(i)] = u.m00;
    out.v[static_cast<std::size_t>(i)] = cd{0.0, -1.0} * u.m01;
  }
  return out;
}

std::vector<cd> gqsp_evaluate(const PhaseFactorSet& phases, std::span<const cd> zs,
                              bool target_upper_left) {
  if (phases.kind != PhaseFactorSet::Kind::gqsp) {
    throw InvalidInput("gqsp_evaluate: wrong phase kind");
  }
  if (phases.psi.size() != phases.phi.size() || phases.psi.empty()) {
    throw InvalidInput("gqsp_evaluate: psi and phi must be nonempty and equally long");
  }
  for (cd z : zs) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12) {
      throw InvalidInput("gqsp_evaluate: sample off the unit circle");
    }
  }
  std::vector<cd> out(zs.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(zs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (zs.size() >= config::kGridParallelMin)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const cd z = zs[static_cast<std::size_t>(i)];
    Mat2 u = two_parameter_rotor(phases.psi[0], phases.phi[0]);
    for (std::size_t k = 1; k < phases.psi.size(); ++k) {
      u.m00 *= z;
      u.m10 *= z;  // right-multiplied diag(z, 1) scales the first column
      u = u * two_parameter_rotor(phases.psi[k], phases.phi[k]);
    }
    // Post-multiplying [[0, -1], [1, 0]] moves the target to the upper-left
    // corner; the carried value is the same entry either way.
    out[static_cast<std::size_t>(i)] = target_upper_left ? (u * Mat2{0.0, -1.0, 1.0, 0.0}).m00
                                                         : u.m01;
  }
  return out;
}

double qsp_target_margin(const QspTarget& f) {
  const int n = std::max(1, f.degree());
  const std::vector<double> xs = chebyshev_grid(static_cast<std::size_t>(4 * n) + 1);
  double worst = 0.0;
  for (double x : xs) worst = std::max(worst, std::abs(chebyshev_eval(f.cheb, x)));
  return 1.0 - worst;
}

double gqsp_target_margin(const GqspTarget& q) {
  LaurentPoly b(0, q.coeffs);
  if (b.is_zero()) return 1.0;
  const std::size_t grid = fft::next_pow2(std::max<std::size_t>(1024, 4 * b.size()));
  return 1.0 - lp_max_on_circle(b, grid);
}

PhaseFactorSet solve_qsp(const QspTarget& f) {
  const int n = f.degree();
  const bool zero_target =
      std::all_of(f.cheb.begin(), f.cheb.end(), [](double c) { return c == 0.0; });

  PhaseFactorSet phases;
  if (zero_target) {
    phases.kind = PhaseFactorSet::Kind::qsp;
    phases.psi.assign(static_cast<std::size_t>(n) + 1, 0.0);
  } else {
    const double margin = qsp_target_margin(f);
    if (margin <= 1e-12) {
      std::ostringstream os;
      os << "solve_qsp: target margin " << margin << " is not positive";
      throw InvalidInput(os.str());
    }
    const LaurentPoly b = chebyshev_to_b(f, n);
    const NlftPair pair = complete_b_outer(b);
    const ComplexSequence g = inverse_nlft(pair, InverseMethod::fast);
    phases = qsp_phases_from_gamma(g);
    phases.psi.resize(static_cast<std::size_t>(n) + 1, 0.0);
  }

  const std::vector<double> xs = chebyshev_grid(1024);
  const QspSignalValues vals = qsp_evaluate(phases, xs);
  double res = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    res = std::max(res, std::abs(vals.u[j].imag() - chebyshev_eval(f.cheb, xs[j])));
  }
  phases.residual = res;
  return phases;
}

PhaseFactorSet solve_gqsp(const GqspTarget& q) {
  const int n = q.degree();
  const LaurentPoly b(0, q.coeffs);

  PhaseFactorSet phases;
  if (b.is_zero()) {
    phases.kind = PhaseFactorSet::Kind::gqsp;
    phases.psi.assign(static_cast<std::size_t>(n) + 1, 0.0);
    phases.phi.assign(static_cast<std::size_t>(n) + 1, 0.0);
  } else {
    const double margin = gqsp_target_margin(q);
    if (margin <= 1e-12) {
      std::ostringstream os;
      os << "solve_gqsp: target margin " << margin << " is not positive";
      throw InvalidInput(os.str());
    }
    const NlftPair pair = complete_b_outer(b);
    const ComplexSequence g = inverse_nlft(pair, InverseMethod::fast);
    phases = gqsp_phases_from_gamma(g);
    phases.psi.resize(static_cast<std::size_t>(n) + 1, 0.0);
    phases.phi.resize(static_cast<std::size_t>(n) + 1, 0.0);
  }

  const std::vector<cd> zs = circle_grid(1024);
  const std::vector<cd> vals = gqsp_evaluate(phases, zs);
  double res = 0.0;
  for (std::size_t j = 0; j < zs.size(); ++j) {
    res = std::max(res, std::abs(vals[j] - lp_eval(b, zs[j])));
  }
  phases.residual = res;
  return phases;
}

}  // namespace nlfft
