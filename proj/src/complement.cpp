#include "nlfft/complement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "nlfft/errors.hpp"
#include "nlfft/roots.hpp"

namespace nlfft {
namespace {

// One equivalence class under u ~ 1/conj(u). Circle classes hold a single
// point of even multiplicity; off-circle classes hold a reflected pair with
// matching multiplicities on both sides.
struct ReflectionClass {
  bool on_circle = false;
  cd outside;  // |root| > 1 representative, or the circle point itself
  cd inside;
  int count = 0;  // copies selected per side (circle: mult/2)
};

bool on_unit_circle(cd r) { return std::abs(std::abs(r) - 1.0) <= config::kCircleSnapTol; }

RootMultiset cluster(const std::vector<cd>& raw) {
  RootMultiset ms;
  std::vector<cd> roots = raw;
  std::sort(roots.begin(), roots.end(), [](cd x, cd y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    cd sum = roots[i];
    int mult = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      const double tol = config::kRootClusterTol * std::max(1.0, std::abs(roots[i]));
      if (std::abs(roots[j] - roots[i]) <= tol) {
        sum += roots[j];
        ++mult;
        used[j] = true;
      }
    }
    cd rep = sum / static_cast<double>(mult);
    if (on_unit_circle(rep)) rep /= std::abs(rep);
    ms.entries.push_back({rep, mult});
  }
  std::sort(ms.entries.begin(), ms.entries.end(), [](const auto& x, const auto& y) {
    return x.root.real() != y.root.real() ? x.root.real() < y.root.real()
                                          : x.root.imag() < y.root.imag();
  });
  return ms;
}

std::vector<ReflectionClass> pair_up(const RootMultiset& ms) {
  std::vector<ReflectionClass> classes;
  std::vector<bool> used(ms.entries.size(), false);
  for (std::size_t i = 0; i < ms.entries.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const auto& e = ms.entries[i];
    if (on_unit_circle(e.root)) {
      if (e.mult % 2 != 0) {
        std::ostringstream os;
        os << "root pairing failure: circle root " << e.root << " has odd multiplicity "
           << e.mult;
        throw NumericalFailure(os.str());
      }
      classes.push_back({true, e.root / std::abs(e.root), e.root, e.mult / 2});
      continue;
    }
    const cd reflected = 1.0 / std::conj(e.root);
    std::size_t partner = ms.entries.size();
    for (std::size_t j = 0; j < ms.entries.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(ms.entries[j].root * std::conj(e.root) - 1.0) <= config::kRootPairTol *
              std::max(1.0, std::abs(ms.entries[j].root) * std::abs(e.root))) {
        partner = j;
        break;
      }
    }
    if (partner == ms.entries.size() || ms.entries[partner].mult != e.mult) {
      std::ostringstream os;
      os << "root pairing failure: no reflected partner for " << e.root << " (expected near "
         << reflected << ")";
      throw NumericalFailure(os.str());
    }
    used[partner] = true;
    const auto& f = ms.entries[partner];
    ReflectionClass c;
    c.on_circle = false;
    if (std::abs(e.root) >= std::abs(f.root)) {
      c.outside = e.root;
      c.inside = f.root;
    } else {
      c.outside = f.root;
      c.inside = e.root;
    }
    c.count = e.mult;
    classes.push_back(c);
  }
  return classes;
}

int degree_span(const LaurentPoly& b) { return b.high_deg() - b.low_deg(); }

LaurentPoly one_minus_bb(const LaurentPoly& b) {
  return lp_sub(LaurentPoly::constant(1.0), lp_mul(b, lp_star(b)));
}

void require_b_in_B(const LaurentPoly& b, const LaurentPoly& q) {
  const std::size_t grid = fft::next_pow2(std::max<std::size_t>(64, 8 * (b.size() + 1)));
  double worst = 0.0;
  for (cd v : lp_eval_circle(q, grid)) worst = std::min(worst, v.real());
  if (worst < -1e-9) {
    std::ostringstream os;
    os << "1 - |b|^2 dips to " << worst << " on the circle grid; b is not admissible";
    throw InvalidInput(os.str());
  }
}

// Expand prod (z - r) over the selection and scale so that the result has
// squared coefficient norm norm_sq and a positive constant term. Working
// from the coefficient 2-norm identity avoids forming the product of all
// roots, which overflows at large degree.
LaurentPoly a_star_from_selection(std::vector<cd> sel, double norm_sq) {
  std::sort(sel.begin(), sel.end(), [](cd x, cd y) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax != ay) return ax < ay;
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  std::vector<cd> p{cd{1.0, 0.0}};
  for (cd r : sel) {
    std::vector<cd> next(p.size() + 1, cd{0.0, 0.0});
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j] -= r * p[j];
      next[j + 1] += p[j];
    }
    p = std::move(next);
  }
  double psq = 0.0;
  for (cd c : p) psq += std::norm(c);
  if (norm_sq <= 0.0 || psq == 0.0) {
    throw NumericalFailure("complement normalization degenerate (||b|| too close to 1)");
  }
  const double mag = std::sqrt(norm_sq / psq);
  const cd phase = std::polar(1.0, -std::arg(p[0]));
  const cd scale = mag * phase;
  for (auto& c : p) c *= scale;
  return LaurentPoly(0, std::move(p));
}

NlftPair assemble(const LaurentPoly& b, const std::vector<cd>& selection) {
  const double norm_sq = 1.0 - lp_norm2_sq(b);
  const LaurentPoly a_star = a_star_from_selection(selection, norm_sq);
  return {lp_star(a_star), b};
}

}  // namespace

int RootMultiset::total() const {
  return std::accumulate(entries.begin(), entries.end(), 0,
                         [](int acc, const Entry& e) { return acc + e.mult; });
}

RootMultiset one_minus_bb_roots(const LaurentPoly& b) {
  if (b.is_zero()) throw InvalidInput("roots of 1 - bb*: b must be nonzero");
  const int d = degree_span(b);
  if (d == 0) return {};
  const LaurentPoly q = one_minus_bb(b);
  const LaurentPoly f = lp_shift(q, d);
  std::vector<cd> coeffs(static_cast<std::size_t>(2 * d + 1), cd{0.0, 0.0});
  for (int j = 0; j <= 2 * d; ++j) coeffs[static_cast<std::size_t>(j)] = f.coeff(j);
  return cluster(poly_roots(std::move(coeffs)));
}

long long counting_N(const RootMultiset& roots) {
  long long prod = 1;
  for (const ReflectionClass& c : pair_up(roots)) {
    if (!c.on_circle) prod *= (c.count + 1);
  }
  return prod;
}

NlftPair complete_b_outer(const LaurentPoly& b) {
  if (b.is_zero()) throw InvalidInput("complete_b_outer: b must be nonzero");
  const LaurentPoly q = one_minus_bb(b);
  require_b_in_B(b, q);

  if (degree_span(b) == 0) {
    const double mod2 = std::norm(b.coeffs()[0]);
    if (mod2 >= 1.0) throw InvalidInput("complete_b_outer: constant b with |b| >= 1");
    return {LaurentPoly::constant(std::sqrt(1.0 - mod2)), b};
  }

  std::vector<cd> selection;
  for (const ReflectionClass& c : pair_up(one_minus_bb_roots(b))) {
    selection.insert(selection.end(), static_cast<std::size_t>(c.count),
                     c.on_circle ? c.outside : c.outside);
  }
  return assemble(b, selection);
}

std::vector<NlftPair> enumerate_complements(const LaurentPoly& b) {
  if (b.is_zero()) throw InvalidInput("enumerate_complements: b must be nonzero");
  const int d = degree_span(b);
  if (d > config::kEnumerateDegreeCap) {
    std::ostringstream os;
    os << "enumerate_complements: degree span " << d << " exceeds cap "
       << config::kEnumerateDegreeCap;
    throw InvalidInput(os.str());
  }
  const LaurentPoly q = one_minus_bb(b);
  require_b_in_B(b, q);

  if (d == 0) return {complete_b_outer(b)};

  const std::vector<ReflectionClass> classes = pair_up(one_minus_bb_roots(b));
  // Odometer over per-class choices: take j copies from outside and
  // count - j from inside; circle classes are forced.
  std::vector<int> choice(classes.size(), 0);
  std::vector<NlftPair> out;
  for (;;) {
    std::vector<cd> selection;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      if (c.on_circle) {
        selection.insert(selection.end(), static_cast<std::size_t>(c.count), c.outside);
      } else {
        const int outside_copies = c.count - choice[i];
        selection.insert(selection.end(), static_cast<std::size_t>(outside_copies), c.outside);
        selection.insert(selection.end(), static_cast<std::size_t>(choice[i]), c.inside);
      }
    }
    out.push_back(assemble(b, selection));

    std::size_t i = 0;
    for (; i < classes.size(); ++i) {
      if (classes[i].on_circle) continue;
      if (choice[i] < classes[i].count) {
        ++choice[i];
        break;
      }
      choice[i] = 0;
    }
    if (i == classes.size()) break;
  }
  return out;
}

Outerness is_outer_poly(const LaurentPoly& p, double margin) {
  if (p.is_zero()) throw InvalidInput("is_outer_poly: zero polynomial");
  if (p.low_deg() != 0) throw InvalidInput("is_outer_poly: expected lowest degree 0");
  if (p.size() == 1) return Outerness::outer_closed_disk;

  std::vector<cd> coeffs(p.coeffs().begin(), p.coeffs().end());
  double min_mod = std::numeric_limits<double>::infinity();
  for (cd r : poly_roots(std::move(coeffs))) min_mod = std::min(min_mod, std::abs(r));
  if (min_mod > 1.0 + margin) return Outerness::outer_closed_disk;
  if (min_mod >= 1.0 - margin) return Outerness::outer;
  return Outerness::not_outer;
}

bool outer_closed_disk_certificate(const LaurentPoly& p, std::size_t grid) {
  if (p.is_zero()) return false;
  if (p.low_deg() != 0) throw InvalidInput("certificate expects a polynomial of lowest degree 0");
  if (p.size() == 1) return true;
  if (grid == 0) grid = fft::next_pow2(std::max<std::size_t>(256, 32 * p.size()));

  for (int attempt = 0; attempt < 3; ++attempt, grid *= 4) {
    const std::vector<cd> vals = lp_eval_circle(p, grid);
    double min_mod = std::numeric_limits<double>::infinity();
    for (cd v : vals) min_mod = std::min(min_mod, std::abs(v));
    if (min_mod <= 1e-12) return false;

    double total = 0.0, worst_step = 0.0;
    bool adequate = true;
    for (std::size_t j = 0; j < vals.size(); ++j) {
      const cd ratio = vals[(j + 1) % vals.size()] / vals[j];
      const double step = std::arg(ratio);
      worst_step = std::max(worst_step, std::abs(step));
      if (std::abs(step) > std::numbers::pi / 2.0) {
        adequate = false;
        break;
      }
      total += step;
    }
    if (!adequate) continue;  // refine the grid
    (void)worst_step;
    const long long winding = std::llround(total / (2.0 * std::numbers::pi));
    return winding == 0;
  }
  return false;
}

NlftPair flip_to_antiouter(const NlftPair& p) {
  for (cd c : p.b.coeffs()) {
    if (std::abs(c.imag()) > 1e-12) {
      throw InvalidInput("flip_to_antiouter: defined for real-coefficient b only");
    }
  }
  if (p.b.is_zero() || p.a.is_zero()) {
    throw InvalidInput("flip_to_antiouter: degenerate pair");
  }
  const int span = p.b.high_deg() - p.b.low_deg();
  LaurentPoly flipped = lp_shift(lp_star(p.a), -span);
  // Sign chosen so the reflected pair keeps a*(0) > 0.
  const double head = std::conj(flipped.coeff(0)).real();
  if (head == 0.0) throw NumericalFailure("flip_to_antiouter: vanishing reflected endpoint");
  if (head < 0.0) flipped = lp_scale(flipped, cd{-1.0, 0.0});
  return {flipped, p.b};
}

}  // namespace nlfft
