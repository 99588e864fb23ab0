#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "nlfft/complement.hpp"
#include "nlfft/diagnostics.hpp"
#include "nlfft/nlft.hpp"
#include "nlfft/qsp.hpp"

namespace nlfft {

using json = nlohmann::json;

// Stable on-disk schemas:
//   LaurentPoly      {"low_deg": int, "re": [f64...], "im": [f64...]}
//   ComplexSequence  {"support_offset": int, "re": [...], "im": [...]}
//   NlftPair         {"a": LaurentPoly, "b": LaurentPoly}
//   PhaseFactorSet   {"kind": "qsp"|"gqsp", "psi": [...], "phi": [...]|null,
//                     "residual": f64}
//   RootMultiset     {"re": [...], "im": [...], "mult": [int...]}
//   QspTarget        {"kind": "chebyshev", "coeffs": [f64...]}
//   GqspTarget       {"kind": "monomial", "re": [...], "im": [...]}
// Doubles round-trip exactly (shortest-representation printing).

json to_json(const LaurentPoly& p);
json to_json(const ComplexSequence& g);
json to_json(const NlftPair& p);
json to_json(const PhaseFactorSet& p);
json to_json(const RootMultiset& r);
json to_json(const NormBoundsReport& r);
json to_json(const PairReport& r);

LaurentPoly laurent_from_json(const json& j);
ComplexSequence sequence_from_json(const json& j);
NlftPair pair_from_json(const json& j);
PhaseFactorSet phases_from_json(const json& j);
QspTarget qsp_target_from_json(const json& j);
GqspTarget gqsp_target_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace nlfft
