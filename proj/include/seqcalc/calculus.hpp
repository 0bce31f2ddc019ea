// Rule schemata, explicit proof trees and per-class proof checking.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "seqcalc/syntax.hpp"

namespace seqcalc {

enum class RuleId {
  Axiom,
  ContrL,
  ContrR,
  BotR,
  AndL1,
  AndL2,
  OrL,
  AndR,
  OrR1,
  OrR2,
  ImpL,
  ImpR,
  AllL,
  ExR,
  ExL,
  AllR,
  AndLStar,
  OrRStar,
  ImpLStar,
  AllLStar,
  ExRStar,
  ImpLStarI,
  OrLG,
  ResG,
  MOrL,
  MImpR,
  MAllR,
};

inline constexpr int kRuleCount = static_cast<int>(RuleId::MAllR) + 1;

std::string_view rule_name(RuleId r);
std::optional<RuleId> rule_from_name(std::string_view name);
int rule_arity(RuleId r);
bool needs_principal(RuleId r);
bool needs_witness(RuleId r);
bool needs_eigen(RuleId r);

struct Principal {
  Side side;
  std::size_t index;  // into the canonical (sorted) side of the conclusion
  friend bool operator==(const Principal&, const Principal&) = default;
};

struct Proof {
  RuleId rule = RuleId::Axiom;
  Sequent conclusion;
  std::optional<Principal> principal;
  std::optional<Term> witness;
  std::optional<std::string> eigen;
  std::vector<Proof> premises;
  int height = 1;

  const Formula& principal_formula() const;
};

// Builds a node and fills in its height.
Proof make_proof(RuleId rule, Sequent conclusion, std::optional<Principal> principal,
                 std::vector<Proof> premises = {}, std::optional<Term> witness = std::nullopt,
                 std::optional<std::string> eigen = std::nullopt);

// Principal at the first occurrence of f on the given side.
Principal locate(const Sequent& s, Side side, const Formula& f);

int compute_height(const Proof& p);
std::size_t proof_size(const Proof& p);

enum class ClassKind { C, I, O, Cstar, Istar, IG, OG, MI_or, MI_forall, Cplus };

struct ProofClass {
  ClassKind kind = ClassKind::C;
  std::optional<Formula> goal;  // IG and OG only

  static ProofClass of(ClassKind k) { return ProofClass{k, std::nullopt}; }
  static ProofClass restart(ClassKind k, Formula g) { return ProofClass{k, std::move(g)}; }
};

std::string_view class_name(ClassKind k);
std::optional<ClassKind> class_from_name(std::string_view name);
bool class_allows(ClassKind k, RuleId r);
bool class_singleton(ClassKind k);
bool class_uniform(ClassKind k);

bool is_axiom(const Sequent& s, bool strengthened = false);

enum class CheckStatus { Valid, Invalid, Malformed };

struct CheckReport {
  CheckStatus status = CheckStatus::Valid;
  std::vector<std::size_t> path;  // premise indices from the root to the offending node
  std::string reason;

  bool ok() const { return status == CheckStatus::Valid; }
};

CheckReport check_proof(const Proof& p, const ProofClass& cls, bool strengthened = false);

using RuleUsageProfile = std::set<RuleId>;

RuleUsageProfile rule_usage(const Proof& p);

// Indented one-node-per-line rendering.
std::string to_tree_string(const Proof& p);

}  // namespace seqcalc
