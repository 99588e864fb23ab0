#include "nlfft/json_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "nlfft/errors.hpp"

namespace nlfft {
namespace {

json split_re_im(std::span<const cd> values) {
  json re = json::array();
  json im = json::array();
  for (cd v : values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

std::vector<cd> join_re_im(const json& j) {
  if (!j.contains("re") || !j.contains("im")) {
    throw InvalidInput("expected re/im arrays");
  }
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size()) {
    throw InvalidInput("re/im must be arrays of equal length");
  }
  std::vector<cd> out(re.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = cd{re[k].get<double>(), im[k].get<double>()};
  }
  return out;
}

}  // namespace

json to_json(const LaurentPoly& p) {
  json j = split_re_im(p.coeffs());
  j["low_deg"] = p.low_deg();
  return j;
}

json to_json(const ComplexSequence& g) {
  json j = split_re_im(g.values);
  j["support_offset"] = g.support_offset;
  return j;
}

json to_json(const NlftPair& p) { return json{{"a", to_json(p.a)}, {"b", to_json(p.b)}}; }

json to_json(const PhaseFactorSet& p) {
  json j;
  j["kind"] = p.kind == PhaseFactorSet::Kind::qsp ? "qsp" : "gqsp";
  j["psi"] = p.psi;
  if (p.kind == PhaseFactorSet::Kind::gqsp) {
    j["phi"] = p.phi;
  } else {
    j["phi"] = nullptr;
  }
  j["residual"] = p.residual;
  return j;
}

json to_json(const RootMultiset& r) {
  json re = json::array(), im = json::array(), mult = json::array();
  for (const auto& e : r.entries) {
    re.push_back(e.root.real());
    im.push_back(e.root.imag());
    mult.push_back(e.mult);
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}, {"mult", std::move(mult)}};
}

json to_json(const NormBoundsReport& r) {
  return json{{"eta_hat", r.eta_hat},
              {"lambda_min", r.lambda_min},
              {"lambda_max", r.lambda_max},
              {"norm_L", r.norm_L},
              {"norm_L_inv", r.norm_L_inv},
              {"norm_DL_inv", r.norm_DL_inv},
              {"slack", r.slack},
              {"pass", r.pass}};
}

json to_json(const PairReport& r) {
  return json{{"residual", r.residual}, {"a0", r.a0},
              {"a0_imag", r.a0_imag},   {"degrees_ok", r.degrees_ok},
              {"pass", r.pass},         {"tol", r.tol},
              {"detail", r.detail}};
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.contains("low_deg")) throw InvalidInput("polynomial JSON needs low_deg");
  return LaurentPoly(j.at("low_deg").get<int>(), join_re_im(j));
}

ComplexSequence sequence_from_json(const json& j) {
  if (!j.contains("support_offset")) throw InvalidInput("sequence JSON needs support_offset");
  return ComplexSequence(join_re_im(j), j.at("support_offset").get<int>());
}

NlftPair pair_from_json(const json& j) {
  if (!j.contains("a") || !j.contains("b")) throw InvalidInput("pair JSON needs a and b");
  return {laurent_from_json(j.at("a")), laurent_from_json(j.at("b"))};
}

PhaseFactorSet phases_from_json(const json& j) {
  PhaseFactorSet p;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "qsp") {
    p.kind = PhaseFactorSet::Kind::qsp;
  } else if (kind == "gqsp") {
    p.kind = PhaseFactorSet::Kind::gqsp;
  } else {
    throw InvalidInput("phase kind must be qsp or gqsp");
  }
  p.psi = j.at("psi").get<std::vector<double>>();
  if (p.kind == PhaseFactorSet::Kind::gqsp) {
    p.phi = j.at("phi").get<std::vector<double>>();
  }
  if (j.contains("residual") && j.at("residual").is_number()) {
    p.residual = j.at("residual").get<double>();
  }
  return p;
}

QspTarget qsp_target_from_json(const json& j) {
  if (j.value("kind", "chebyshev") != "chebyshev") {
    throw InvalidInput("qsp target kind must be chebyshev");
  }
  QspTarget f;
  f.cheb = j.at("coeffs").get<std::vector<double>>();
  return f;
}

GqspTarget gqsp_target_from_json(const json& j) {
  if (j.value("kind", "monomial") != "monomial") {
    throw InvalidInput("gqsp target kind must be monomial");
  }
  GqspTarget q;
  q.coeffs = join_re_im(j);
  return q;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace nlfft
