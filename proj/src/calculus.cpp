#include "seqcalc/calculus.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace seqcalc {

namespace {

struct RuleInfo {
  RuleId id;
  std::string_view name;
  int arity;
};

constexpr std::array<RuleInfo, kRuleCount> kRules{{
    {RuleId::Axiom, "axiom", 0},     {RuleId::ContrL, "contr-L", 1},
    {RuleId::ContrR, "contr-R", 1},  {RuleId::BotR, "bot-R", 1},
    {RuleId::AndL1, "and-L1", 1},    {RuleId::AndL2, "and-L2", 1},
    {RuleId::OrL, "or-L", 2},        {RuleId::AndR, "and-R", 2},
    {RuleId::OrR1, "or-R1", 1},      {RuleId::OrR2, "or-R2", 1},
    {RuleId::ImpL, "imp-L", 2},      {RuleId::ImpR, "imp-R", 1},
    {RuleId::AllL, "all-L", 1},      {RuleId::ExR, "ex-R", 1},
    {RuleId::ExL, "ex-L", 1},        {RuleId::AllR, "all-R", 1},
    {RuleId::AndLStar, "and-L*", 1}, {RuleId::OrRStar, "or-R*", 1},
    {RuleId::ImpLStar, "imp-L*", 2}, {RuleId::AllLStar, "all-L*", 1},
    {RuleId::ExRStar, "ex-R*", 1},   {RuleId::ImpLStarI, "imp-L*I", 2},
    {RuleId::OrLG, "or-L_G", 2},     {RuleId::ResG, "res_G", 1},
    {RuleId::MOrL, "M-or-L", 2},     {RuleId::MImpR, "M-imp-R", 1},
    {RuleId::MAllR, "M-all-R", 1},
}};

const RuleInfo& info(RuleId r) { return kRules[static_cast<std::size_t>(r)]; }

}  // namespace

std::string_view rule_name(RuleId r) { return info(r).name; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& r : kRules)
    if (r.name == name) return r.id;
  return std::nullopt;
}

int rule_arity(RuleId r) { return info(r).arity; }

bool needs_principal(RuleId r) { return r != RuleId::Axiom && r != RuleId::ResG; }

bool needs_witness(RuleId r) {
  return r == RuleId::AllL || r == RuleId::ExR || r == RuleId::AllLStar || r == RuleId::ExRStar;
}

bool needs_eigen(RuleId r) { return r == RuleId::ExL || r == RuleId::AllR || r == RuleId::MAllR; }

const Formula& Proof::principal_formula() const {
  if (!principal) throw std::logic_error("proof node has no principal formula");
  return conclusion.side(principal->side).at(principal->index);
}

int compute_height(const Proof& p) {
  int h = 0;
  for (const auto& q : p.premises) h = std::max(h, compute_height(q));
  return h + 1;
}

std::size_t proof_size(const Proof& p) {
  std::size_t n = 1;
  for (const auto& q : p.premises) n += proof_size(q);
  return n;
}

Proof make_proof(RuleId rule, Sequent conclusion, std::optional<Principal> principal,
                 std::vector<Proof> premises, std::optional<Term> witness,
                 std::optional<std::string> eigen) {
  Proof p;
  p.rule = rule;
  p.conclusion = std::move(conclusion);
  p.principal = principal;
  p.premises = std::move(premises);
  p.witness = std::move(witness);
  p.eigen = std::move(eigen);
  int h = 0;
  for (const auto& q : p.premises) h = std::max(h, q.height);
  p.height = h + 1;
  return p;
}

Principal locate(const Sequent& s, Side side, const Formula& f) {
  std::size_t i = s.find(side, f);
  if (i == Sequent::npos) throw std::logic_error("formula not present in sequent: " + to_string(f));
  return Principal{side, i};
}

// ---------------------------------------------------------------- classes

std::string_view class_name(ClassKind k) {
  switch (k) {
    case ClassKind::C: return "C";
    case ClassKind::I: return "I";
    case ClassKind::O: return "O";
    case ClassKind::Cstar: return "Cstar";
    case ClassKind::Istar: return "Istar";
    case ClassKind::IG: return "IG";
    case ClassKind::OG: return "OG";
    case ClassKind::MI_or: return "MI_or";
    case ClassKind::MI_forall: return "MI_forall";
    case ClassKind::Cplus: return "Cplus";
  }
  return "?";
}

std::optional<ClassKind> class_from_name(std::string_view name) {
  for (ClassKind k : {ClassKind::C, ClassKind::I, ClassKind::O, ClassKind::Cstar, ClassKind::Istar,
                      ClassKind::IG, ClassKind::OG, ClassKind::MI_or, ClassKind::MI_forall,
                      ClassKind::Cplus})
    if (class_name(k) == name) return k;
  return std::nullopt;
}

namespace {

using R = RuleId;

bool plain_rule(RuleId r) { return static_cast<int>(r) <= static_cast<int>(R::AllR); }

bool cstar_rule(RuleId r) {
  switch (r) {
    case R::Axiom: case R::BotR: case R::AndLStar: case R::OrL: case R::AndR:
    case R::OrRStar: case R::ImpLStar: case R::ImpR: case R::AllLStar: case R::ExRStar:
    case R::ExL: case R::AllR:
      return true;
    default:
      return false;
  }
}

}  // namespace

bool class_allows(ClassKind k, RuleId r) {
  switch (k) {
    case ClassKind::C:
    case ClassKind::I:
    case ClassKind::O:
      return plain_rule(r);
    case ClassKind::IG:
    case ClassKind::OG:
      return (plain_rule(r) && r != R::OrL) || r == R::OrLG || r == R::ResG;
    case ClassKind::Cstar:
      return cstar_rule(r);
    case ClassKind::Cplus:
      return cstar_rule(r) || r == R::ContrL || r == R::ContrR;
    case ClassKind::Istar:
      switch (r) {
        case R::Axiom: case R::BotR: case R::AndLStar: case R::OrL: case R::AndR: case R::OrR1:
        case R::OrR2: case R::ImpLStarI: case R::ImpR: case R::AllLStar: case R::ExR:
        case R::ExL: case R::AllR:
          return true;
        default:
          return false;
      }
    case ClassKind::MI_or:
      return (cstar_rule(r) && r != R::OrL && r != R::ImpR) || r == R::MOrL || r == R::MImpR;
    case ClassKind::MI_forall:
      return (cstar_rule(r) && r != R::AllR && r != R::ImpR) || r == R::MAllR || r == R::MImpR;
  }
  return false;
}

bool class_singleton(ClassKind k) {
  return k == ClassKind::I || k == ClassKind::O || k == ClassKind::Istar || k == ClassKind::IG ||
         k == ClassKind::OG;
}

bool class_uniform(ClassKind k) { return k == ClassKind::O || k == ClassKind::OG; }

bool is_axiom(const Sequent& s, bool strengthened) {
  if (s.contains(Side::Succ, Formula::top())) return true;
  for (const auto& a : s.ante()) {
    if (!strengthened && !a.is_atomic() && a.kind() != FormulaKind::Bot) continue;
    if (s.contains(Side::Succ, a)) return true;
  }
  return false;
}

// ---------------------------------------------------------------- checker

namespace {

struct NodeError {
  CheckStatus status;
  std::string reason;
};

class Checker {
 public:
  Checker(const ProofClass& cls, bool strengthened) : cls_(cls), strengthened_(strengthened) {}

  std::optional<NodeError> node(const Proof& p, std::vector<std::size_t>& path,
                                std::vector<std::size_t>& where) {
    if (auto e = local(p)) {
      where = path;
      return e;
    }
    for (std::size_t i = 0; i < p.premises.size(); ++i) {
      path.push_back(i);
      if (auto e = node(p.premises[i], path, where)) return e;
      path.pop_back();
    }
    return std::nullopt;
  }

 private:
  static NodeError malformed(std::string why) { return {CheckStatus::Malformed, std::move(why)}; }
  static NodeError invalid(std::string why) { return {CheckStatus::Invalid, std::move(why)}; }

  std::optional<NodeError> local(const Proof& p) {
    const RuleId r = p.rule;
    const std::string rn(rule_name(r));
    if (static_cast<int>(p.premises.size()) != rule_arity(r))
      return malformed(rn + " expects " + std::to_string(rule_arity(r)) + " premise(s), found " +
                       std::to_string(p.premises.size()));
    if (needs_principal(r)) {
      if (!p.principal) return malformed(rn + " without a principal formula");
      if (p.principal->index >= p.conclusion.side(p.principal->side).size())
        return malformed(rn + " principal index out of range");
    }
    if (needs_witness(r) && !p.witness) return malformed(rn + " without a witness term");
    if (needs_eigen(r) && !p.eigen) return malformed(rn + " without an eigenvariable");
    int expected_height = 1;
    for (const auto& q : p.premises) expected_height = std::max(expected_height, q.height + 1);
    if (p.height != expected_height)
      return invalid("recorded height " + std::to_string(p.height) + " differs from " +
                     std::to_string(expected_height));
    if (!class_allows(cls_.kind, r))
      return invalid(rn + " is not a rule of class " + std::string(class_name(cls_.kind)));
    if (class_singleton(cls_.kind) && p.conclusion.succ().size() != 1)
      return invalid("succedent not singleton");
    if (class_uniform(cls_.kind))
      if (auto e = uniformity(p)) return e;
    return schema(p);
  }

  std::optional<NodeError> uniformity(const Proof& p) {
    const Formula& f = p.conclusion.succ().front();
    if (f.is_atomic() || f.kind() == FormulaKind::Bot) return std::nullopt;
    RuleId want1 = R::Axiom, want2 = R::Axiom;
    switch (f.kind()) {
      case FormulaKind::Top: want1 = want2 = R::Axiom; break;
      case FormulaKind::And: want1 = want2 = R::AndR; break;
      case FormulaKind::Or: want1 = R::OrR1; want2 = R::OrR2; break;
      case FormulaKind::Imp: want1 = want2 = R::ImpR; break;
      case FormulaKind::Forall: want1 = want2 = R::AllR; break;
      case FormulaKind::Exists: want1 = want2 = R::ExR; break;
      default: break;
    }
    bool ok = p.rule == want1 || p.rule == want2;
    if (ok && f.kind() == FormulaKind::Top) return std::nullopt;
    if (ok && p.principal && p.principal->side == Side::Succ) return std::nullopt;
    return invalid("non-atomic succedent " + to_string(f) + " not introduced by a right rule");
  }

  std::optional<NodeError> expect(const Proof& p, std::size_t i, const Sequent& want) {
    if (p.premises[i].conclusion == want) return std::nullopt;
    return invalid(std::string(rule_name(p.rule)) + " premise " + std::to_string(i + 1) +
                   " should be " + to_string(want) + " but is " +
                   to_string(p.premises[i].conclusion));
  }

  std::optional<NodeError> need_kind(const Proof& p, Side side, FormulaKind k, const char* what) {
    const Principal& pr = *p.principal;
    if (pr.side != side)
      return invalid(std::string(rule_name(p.rule)) + " principal on the wrong side");
    if (p.conclusion.side(side)[pr.index].kind() != k)
      return invalid(std::string(rule_name(p.rule)) + " principal is not " + what);
    return std::nullopt;
  }

  std::optional<NodeError> closed_witness(const Proof& p) {
    if (!p.witness->is_closed() || p.witness->has_var() || p.witness->has_meta())
      return invalid("witness " + to_string(*p.witness) + " is not a ground term");
    return std::nullopt;
  }

  std::optional<NodeError> eigen_ok(const Proof& p) {
    const std::string& c = *p.eigen;
    if (c.empty() || !std::islower(static_cast<unsigned char>(c[0])))
      return invalid("eigenvariable '" + c + "' is not a constant name");
    if (p.conclusion.symbols().count(c))
      return invalid("eigenvariable " + c + " occurs in the lower sequent");
    if ((cls_.kind == ClassKind::IG || cls_.kind == ClassKind::OG) && cls_.goal &&
        free_symbols(*cls_.goal).count(c))
      return invalid("eigenvariable " + c + " occurs in the restart goal");
    return std::nullopt;
  }

  std::optional<NodeError> single_succ(const Proof& p, std::size_t i) {
    if (p.premises[i].conclusion.succ().size() != 1)
      return invalid(std::string(rule_name(p.rule)) + " premise " + std::to_string(i + 1) +
                     " must have one succedent formula");
    return std::nullopt;
  }

  std::optional<NodeError> schema(const Proof& p);

  const ProofClass& cls_;
  bool strengthened_;
};

std::optional<NodeError> Checker::schema(const Proof& p) {
  const Sequent& s = p.conclusion;
  const RuleId r = p.rule;
  if (r == R::Axiom) {
    if (is_axiom(s, strengthened_)) return std::nullopt;
    return invalid("not an axiom: " + to_string(s));
  }
  if (r == R::ResG) {
    if (!cls_.goal) return invalid("res_G used without a restart goal");
    return expect(p, 0, Sequent(s.ante(), {*cls_.goal}));
  }
  const Principal pr = *p.principal;
  const Formula f = s.side(pr.side)[pr.index];
  const Sequent rest = s.without(pr.side, pr.index);
  std::optional<NodeError> e;
  switch (r) {
    case R::ContrL:
    case R::ContrR: {
      Side side = r == R::ContrL ? Side::Ante : Side::Succ;
      if (pr.side != side) return invalid("contraction principal on the wrong side");
      return expect(p, 0, s.with_added(side, f));
    }
    case R::BotR:
      if (pr.side != Side::Succ) return invalid("bot-R principal must be in the succedent");
      return expect(p, 0, rest.with_added(Side::Succ, Formula::bot()));
    case R::AndL1:
    case R::AndL2:
      if ((e = need_kind(p, Side::Ante, FormulaKind::And, "a conjunction"))) return e;
      return expect(p, 0, rest.with_added(Side::Ante, r == R::AndL1 ? f.left() : f.right()));
    case R::AndLStar:
      if ((e = need_kind(p, Side::Ante, FormulaKind::And, "a conjunction"))) return e;
      return expect(p, 0, rest.with_added(Side::Ante, {f.left(), f.right()}));
    case R::OrL:
      if ((e = need_kind(p, Side::Ante, FormulaKind::Or, "a disjunction"))) return e;
      if ((e = expect(p, 0, rest.with_added(Side::Ante, f.left())))) return e;
      return expect(p, 1, rest.with_added(Side::Ante, f.right()));
    case R::OrLG: {
      if ((e = need_kind(p, Side::Ante, FormulaKind::Or, "a disjunction"))) return e;
      if (!cls_.goal) return invalid("or-L_G used without a restart goal");
      if ((e = expect(p, 0, rest.with_added(Side::Ante, f.left())))) return e;
      Sequent second(rest.ante(), {*cls_.goal});
      return expect(p, 1, second.with_added(Side::Ante, f.right()));
    }
    case R::MOrL: {
      if ((e = need_kind(p, Side::Ante, FormulaKind::Or, "a disjunction"))) return e;
      if ((e = single_succ(p, 0))) return e;
      const Formula& g = p.premises[0].conclusion.succ().front();
      if (!s.contains(Side::Succ, g))
        return invalid("M-or-L premise goal " + to_string(g) + " is not in the conclusion");
      Sequent base(rest.ante(), {g});
      if ((e = expect(p, 0, base.with_added(Side::Ante, f.left())))) return e;
      return expect(p, 1, base.with_added(Side::Ante, f.right()));
    }
    case R::AndR:
      if ((e = need_kind(p, Side::Succ, FormulaKind::And, "a conjunction"))) return e;
      if ((e = expect(p, 0, rest.with_added(Side::Succ, f.left())))) return e;
      return expect(p, 1, rest.with_added(Side::Succ, f.right()));
    case R::OrR1:
    case R::OrR2:
      if ((e = need_kind(p, Side::Succ, FormulaKind::Or, "a disjunction"))) return e;
      return expect(p, 0, rest.with_added(Side::Succ, r == R::OrR1 ? f.left() : f.right()));
    case R::OrRStar:
      if ((e = need_kind(p, Side::Succ, FormulaKind::Or, "a disjunction"))) return e;
      return expect(p, 0, rest.with_added(Side::Succ, {f.left(), f.right()}));
    case R::ImpL: {
      if ((e = need_kind(p, Side::Ante, FormulaKind::Imp, "an implication"))) return e;
      const Sequent& a = p.premises[0].conclusion;
      const Sequent& b = p.premises[1].conclusion;
      if (a.ante() != rest.ante())
        return invalid("imp-L left premise antecedent should be the side formulas");
      Sequent want_b_ante = rest.with_added(Side::Ante, f.right());
      if (b.ante() != want_b_ante.ante())
        return invalid("imp-L right premise antecedent should add " + to_string(f.right()));
      std::vector<Formula> delta1 = a.succ();
      if (!multiset_remove(delta1, f.left()))
        return invalid("imp-L left premise lacks " + to_string(f.left()) + " in the succedent");
      if (multiset_sum(delta1, b.succ()) != rest.succ())
        return invalid("imp-L premise succedents do not split the conclusion succedent");
      return std::nullopt;
    }
    case R::ImpLStar:
      if ((e = need_kind(p, Side::Ante, FormulaKind::Imp, "an implication"))) return e;
      if ((e = expect(p, 0, rest.with_added(Side::Succ, f.left())))) return e;
      return expect(p, 1, rest.with_added(Side::Ante, f.right()));
    case R::ImpLStarI:
      if ((e = need_kind(p, Side::Ante, FormulaKind::Imp, "an implication"))) return e;
      if ((e = expect(p, 0, Sequent(s.ante(), {f.left()})))) return e;
      return expect(p, 1, rest.with_added(Side::Ante, f.right()));
    case R::ImpR:
      if ((e = need_kind(p, Side::Succ, FormulaKind::Imp, "an implication"))) return e;
      return expect(p, 0, rest.with_added(Side::Ante, f.left()).with_added(Side::Succ, f.right()));
    case R::MImpR:
      if ((e = need_kind(p, Side::Succ, FormulaKind::Imp, "an implication"))) return e;
      return expect(p, 0, Sequent(rest.ante(), {f.right()}).with_added(Side::Ante, f.left()));
    case R::AllL:
    case R::AllLStar: {
      if ((e = need_kind(p, Side::Ante, FormulaKind::Forall, "a universal"))) return e;
      if ((e = closed_witness(p))) return e;
      const Sequent& base = r == R::AllL ? rest : s;
      return expect(p, 0, base.with_added(Side::Ante, instantiate(f.body(), *p.witness)));
    }
    case R::ExR:
    case R::ExRStar: {
      if ((e = need_kind(p, Side::Succ, FormulaKind::Exists, "an existential"))) return e;
      if ((e = closed_witness(p))) return e;
      const Sequent& base = r == R::ExR ? rest : s;
      return expect(p, 0, base.with_added(Side::Succ, instantiate(f.body(), *p.witness)));
    }
    case R::ExL:
      if ((e = need_kind(p, Side::Ante, FormulaKind::Exists, "an existential"))) return e;
      if ((e = eigen_ok(p))) return e;
      return expect(p, 0,
                    rest.with_added(Side::Ante, instantiate(f.body(), Term::constant(*p.eigen))));
    case R::AllR:
      if ((e = need_kind(p, Side::Succ, FormulaKind::Forall, "a universal"))) return e;
      if ((e = eigen_ok(p))) return e;
      return expect(p, 0,
                    rest.with_added(Side::Succ, instantiate(f.body(), Term::constant(*p.eigen))));
    case R::MAllR:
      if ((e = need_kind(p, Side::Succ, FormulaKind::Forall, "a universal"))) return e;
      if ((e = eigen_ok(p))) return e;
      return expect(p, 0,
                    Sequent(rest.ante(), {instantiate(f.body(), Term::constant(*p.eigen))}));
    default:
      break;
  }
  return invalid("unhandled rule " + std::string(rule_name(r)));
}

}  // namespace

CheckReport check_proof(const Proof& p, const ProofClass& cls, bool strengthened) {
  CheckReport rep;
  if ((cls.kind == ClassKind::IG || cls.kind == ClassKind::OG) && !cls.goal) {
    rep.status = CheckStatus::Malformed;
    rep.reason = "restart class without a goal formula";
    return rep;
  }
  Checker c(cls, strengthened);
  std::vector<std::size_t> path;
  std::vector<std::size_t> where;
  if (auto e = c.node(p, path, where)) {
    rep.status = e->status;
    rep.reason = e->reason;
    rep.path = where;
  }
  return rep;
}

namespace {

void collect(const Proof& p, RuleUsageProfile& out) {
  out.insert(p.rule);
  for (const auto& q : p.premises) collect(q, out);
}

void render(const Proof& p, int depth, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << rule_name(p.rule);
  if (p.witness) os << " [" << to_string(*p.witness) << "]";
  if (p.eigen) os << " {" << *p.eigen << "}";
  os << ": " << to_string(p.conclusion) << "\n";
  for (const auto& q : p.premises) render(q, depth + 1, os);
}

}  // namespace

RuleUsageProfile rule_usage(const Proof& p) {
  RuleUsageProfile out;
  collect(p, out);
  return out;
}

std::string to_tree_string(const Proof& p) {
  std::ostringstream os;
  render(p, 0, os);
  return os.str();
}

}  // namespace seqcalc
