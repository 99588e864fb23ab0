#pragma once

#include <vector>

#include "nlfft/config.hpp"
#include "nlfft/nlft.hpp"

namespace nlfft {

/// Multiset of nonzero complex roots with multiplicities. Instances built
/// from 1 - b b* are closed under u -> 1/conj(u), and unit-circle roots
/// carry even multiplicity.
struct RootMultiset {
  struct Entry {
    cd root;
    int mult = 1;
  };
  std::vector<Entry> entries;

  int total() const;
};

/// Roots of 1 - b b* in C^*, computed from the companion matrix of
/// z^d (1 - b b*), clustered into multiplicities and snapped onto the
/// unit circle within the documented tolerances.
RootMultiset one_minus_bb_roots(const LaurentPoly& b);

/// Number of complementary partners for a pair with these reflection-
/// symmetric roots: product over equivalence classes y (under u ~ 1/conj(u))
/// of 1 if y touches the circle, else 1 + |y|/2. Classes of odd size are
/// rejected.
long long counting_N(const RootMultiset& roots);

/// The unique complement with no zeros of a* in the open disk: picks the
/// |root| >= 1 representative from every reflected pair (circle roots at
/// half multiplicity), then fixes the scalar so that a*(0) > 0 and
/// aa* + bb* = 1.
NlftPair complete_b_outer(const LaurentPoly& b);

/// All complements of b, one per admissible root selection. Exponentially
/// many; refuses degree spans above config::kEnumerateDegreeCap.
std::vector<NlftPair> enumerate_complements(const LaurentPoly& b);

enum class Outerness { not_outer, outer, outer_closed_disk };

/// Classifies a genuine polynomial (lowest degree 0) by its root moduli:
/// all > 1 + margin -> outer_closed_disk, all >= 1 - margin -> outer.
Outerness is_outer_poly(const LaurentPoly& p, double margin = config::kOuterMargin);

/// Argument-principle certificate that a polynomial has no zeros in the
/// closed unit disk: zero winding of p on a circle grid with adequate
/// sampling and |p| bounded away from zero. Usable at degrees where dense
/// root finding is impractical; returns false when the grid evidence is
/// inconclusive.
bool outer_closed_disk_certificate(const LaurentPoly& p, std::size_t grid = 0);

/// The reflected complement sigma z^(-D) a*(z) of the instability study:
/// keeps b, replaces a by its conjugate-reflection with the sign fixed so
/// the result stays in the image set. Defined for real-coefficient b;
/// complex b is rejected.
NlftPair flip_to_antiouter(const NlftPair& p);

}  // namespace nlfft
