#include "seqcalc/proof_json.hpp"

#include <json.hpp>

#include "seqcalc/parser.hpp"

namespace seqcalc {

namespace {

using nlohmann::json;

json formulas(const std::vector<Formula>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(to_string(f));
  return a;
}

json node_to_json(const Proof& p) {
  json j;
  j["rule"] = std::string(rule_name(p.rule));
  j["sequent"] = {{"ante", formulas(p.conclusion.ante())}, {"succ", formulas(p.conclusion.succ())}};
  if (p.principal)
    j["principal"] = {{"side", p.principal->side == Side::Ante ? "ante" : "succ"},
                      {"index", p.principal->index}};
  else
    j["principal"] = nullptr;
  j["witness"] = p.witness ? json(to_string(*p.witness)) : json(nullptr);
  j["eigen"] = p.eigen ? json(*p.eigen) : json(nullptr);
  json prem = json::array();
  for (const auto& q : p.premises) prem.push_back(node_to_json(q));
  j["premises"] = std::move(prem);
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ProofFormatError(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::vector<Formula> read_side(const json& arr, const char* what) {
  if (!arr.is_array()) throw ProofFormatError(std::string(what) + " must be an array");
  std::vector<Formula> out;
  for (const auto& s : arr) {
    if (!s.is_string()) throw ProofFormatError(std::string(what) + " entries must be strings");
    out.push_back(parse_formula(s.get<std::string>()));
  }
  return out;
}

Proof node_from_json(const json& j) {
  const json& rj = field(j, "rule");
  if (!rj.is_string()) throw ProofFormatError("rule must be a string");
  auto rule = rule_from_name(rj.get<std::string>());
  if (!rule) throw ProofFormatError("unknown rule '" + rj.get<std::string>() + "'");
  const json& sj = field(j, "sequent");
  std::vector<Formula> ante = read_side(field(sj, "ante"), "ante");
  std::vector<Formula> succ = read_side(field(sj, "succ"), "succ");
  Proof p;
  p.rule = *rule;
  p.conclusion = Sequent(ante, succ);

  const json& pj = field(j, "principal");
  if (!pj.is_null()) {
    const json& side_j = field(pj, "side");
    const json& idx_j = field(pj, "index");
    if (!side_j.is_string() || !idx_j.is_number_unsigned())
      throw ProofFormatError("principal needs a side string and a non-negative index");
    std::string side = side_j.get<std::string>();
    if (side != "ante" && side != "succ") throw ProofFormatError("principal side must be ante or succ");
    Side sd = side == "ante" ? Side::Ante : Side::Succ;
    const auto& raw = sd == Side::Ante ? ante : succ;
    auto idx = idx_j.get<std::size_t>();
    if (idx >= raw.size()) throw ProofFormatError("principal index out of range");
    p.principal = Principal{sd, p.conclusion.find(sd, raw[idx])};
  }
  const json& wj = field(j, "witness");
  if (!wj.is_null()) {
    if (!wj.is_string()) throw ProofFormatError("witness must be a string or null");
    p.witness = parse_term(wj.get<std::string>());
  }
  const json& ej = field(j, "eigen");
  if (!ej.is_null()) {
    if (!ej.is_string()) throw ProofFormatError("eigen must be a string or null");
    p.eigen = ej.get<std::string>();
  }
  const json& prem = field(j, "premises");
  if (!prem.is_array()) throw ProofFormatError("premises must be an array");
  int h = 0;
  for (const auto& q : prem) {
    p.premises.push_back(node_from_json(q));
    h = std::max(h, p.premises.back().height);
  }
  p.height = h + 1;
  return p;
}

}  // namespace

std::string write_proof_json(const Proof& p, const ProofClass& cls, int indent) {
  json j = node_to_json(p);
  j["class"] = std::string(class_name(cls.kind));
  if (cls.goal) j["goal"] = to_string(*cls.goal);
  return j.dump(indent);
}

ProofDocument read_proof_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProofFormatError(std::string("invalid JSON: ") + e.what());
  }
  ProofDocument doc;
  const json& cj = field(j, "class");
  if (!cj.is_string()) throw ProofFormatError("class must be a string");
  auto k = class_from_name(cj.get<std::string>());
  if (!k) throw ProofFormatError("unknown proof class '" + cj.get<std::string>() + "'");
  doc.cls.kind = *k;
  if (j.contains("goal") && !j.at("goal").is_null()) {
    if (!j.at("goal").is_string()) throw ProofFormatError("goal must be a string");
    doc.cls.goal = parse_formula(j.at("goal").get<std::string>());
  }
  if ((*k == ClassKind::IG || *k == ClassKind::OG) && !doc.cls.goal)
    throw ProofFormatError("restart classes need a goal");
  doc.proof = node_from_json(j);
  return doc;
}

}  // namespace seqcalc
