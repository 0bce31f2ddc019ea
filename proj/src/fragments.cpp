#include "seqcalc/fragments.hpp"

#include <stdexcept>

namespace seqcalc {

namespace {

using K = FormulaKind;

bool base(const Formula& f) {
  return f.kind() == K::Top || f.kind() == K::Bot || f.kind() == K::Atom;
}

bool goal(const Formula& f, FragmentId fr);
bool clause(const Formula& f, FragmentId fr);

// G' of the classical logic programming grammar.
bool gprime(const Formula& f) {
  if (base(f)) return true;
  switch (f.kind()) {
    case K::And:
    case K::Or:
      return gprime(f.left()) && gprime(f.right());
    case K::Forall:
    case K::Exists:
      return gprime(f.body());
    default:
      return false;
  }
}

bool goal(const Formula& f, FragmentId fr) {
  if (base(f)) return true;
  switch (fr) {
    case FragmentId::F1:
      switch (f.kind()) {
        case K::And: case K::Or: return goal(f.left(), fr) && goal(f.right(), fr);
        case K::Forall: case K::Exists: return goal(f.body(), fr);
        default: return false;
      }
    case FragmentId::F2:
      switch (f.kind()) {
        case K::And: case K::Or: return goal(f.left(), fr) && goal(f.right(), fr);
        case K::Exists: return goal(f.body(), fr);
        default: return false;
      }
    case FragmentId::F3:
      switch (f.kind()) {
        case K::And: case K::Or: return goal(f.left(), fr) && goal(f.right(), fr);
        case K::Exists: case K::Forall: return goal(f.body(), fr);
        default: return false;
      }
    case FragmentId::F4:
      switch (f.kind()) {
        case K::And: return goal(f.left(), fr) && goal(f.right(), fr);
        case K::Imp: return clause(f.left(), fr) && goal(f.right(), fr);
        case K::Forall: return goal(f.body(), fr);
        default: return false;
      }
    case FragmentId::LP_INT:
      switch (f.kind()) {
        case K::And: case K::Or: return goal(f.left(), fr) && goal(f.right(), fr);
        case K::Imp: return clause(f.left(), fr) && goal(f.right(), fr);
        case K::Forall: case K::Exists: return goal(f.body(), fr);
        default: return false;
      }
    case FragmentId::LP_CLS:
      if (gprime(f)) return true;
      switch (f.kind()) {
        case K::And: return goal(f.left(), fr) && goal(f.right(), fr);
        case K::Imp: return clause(f.left(), fr) && goal(f.right(), fr);
        case K::Forall: return goal(f.body(), fr);
        default: return false;
      }
  }
  return false;
}

bool clause(const Formula& f, FragmentId fr) {
  if (base(f)) return true;
  switch (fr) {
    case FragmentId::F1:
      switch (f.kind()) {
        case K::Imp: return goal(f.left(), fr) && clause(f.right(), fr);
        case K::And: return clause(f.left(), fr) && clause(f.right(), fr);
        case K::Exists: case K::Forall: return clause(f.body(), fr);
        default: return false;
      }
    case FragmentId::F2:
      switch (f.kind()) {
        case K::Imp: return goal(f.left(), fr) && clause(f.right(), fr);
        case K::And: case K::Or: return clause(f.left(), fr) && clause(f.right(), fr);
        case K::Exists: case K::Forall: return clause(f.body(), fr);
        default: return false;
      }
    case FragmentId::F3:
      switch (f.kind()) {
        case K::Imp: return goal(f.left(), fr) && clause(f.right(), fr);
        case K::And: case K::Or: return clause(f.left(), fr) && clause(f.right(), fr);
        case K::Exists: return clause(f.body(), fr);
        default: return false;
      }
    case FragmentId::F4:
      switch (f.kind()) {
        case K::And: case K::Or: return clause(f.left(), fr) && clause(f.right(), fr);
        case K::Exists: case K::Forall: return clause(f.body(), fr);
        default: return false;
      }
    case FragmentId::LP_INT:
      switch (f.kind()) {
        case K::Imp: return goal(f.left(), fr) && clause(f.right(), fr);
        case K::And: return clause(f.left(), fr) && clause(f.right(), fr);
        case K::Forall: return clause(f.body(), fr);
        default: return false;
      }
    case FragmentId::LP_CLS:
      switch (f.kind()) {
        case K::Imp: return gprime(f.left()) && clause(f.right(), fr);
        case K::And: return clause(f.left(), fr) && clause(f.right(), fr);
        case K::Forall: return clause(f.body(), fr);
        default: return false;
      }
  }
  return false;
}

bool uses(const RuleUsageProfile& p, RuleId r) { return p.count(r) > 0; }

void require_plain(const RuleUsageProfile& prof) {
  for (RuleId r : prof)
    if (static_cast<int>(r) > static_cast<int>(RuleId::AllR))
      throw std::invalid_argument("profile contains non-classical rule " +
                                  std::string(rule_name(r)));
}

}  // namespace

std::string_view fragment_name(FragmentId f) {
  switch (f) {
    case FragmentId::F1: return "f1";
    case FragmentId::F2: return "f2";
    case FragmentId::F3: return "f3";
    case FragmentId::F4: return "f4";
    case FragmentId::LP_INT: return "lp-int";
    case FragmentId::LP_CLS: return "lp-cls";
  }
  return "?";
}

std::optional<FragmentId> fragment_from_name(std::string_view name) {
  for (FragmentId f : {FragmentId::F1, FragmentId::F2, FragmentId::F3, FragmentId::F4,
                       FragmentId::LP_INT, FragmentId::LP_CLS})
    if (fragment_name(f) == name) return f;
  return std::nullopt;
}

std::string_view role_name(Role r) {
  switch (r) {
    case Role::Goal: return "goal";
    case Role::Clause: return "clause";
    case Role::GPrime: return "gprime";
  }
  return "?";
}

std::optional<Role> role_from_name(std::string_view name) {
  for (Role r : {Role::Goal, Role::Clause, Role::GPrime})
    if (role_name(r) == name) return r;
  return std::nullopt;
}

bool classify(const Formula& f, FragmentId frag, Role role) {
  switch (role) {
    case Role::Goal:
      return goal(f, frag);
    case Role::Clause:
      return clause(f, frag);
    case Role::GPrime:
      if (frag != FragmentId::LP_CLS)
        throw std::invalid_argument("role gprime exists only for lp-cls");
      return gprime(f);
  }
  return false;
}

bool fragment_guarantee(const Sequent& s, FragmentId frag) {
  if (s.succ().size() != 1) throw std::invalid_argument("succedent must hold exactly one formula");
  for (const auto& a : s.ante())
    if (!clause(a, frag)) return false;
  return goal(s.succ().front(), frag);
}

std::string_view condition_text(IntuitionisticCondition c) {
  switch (c) {
    case IntuitionisticCondition::NoImpRNoOrL: return "no imp-R and no or-L";
    case IntuitionisticCondition::NoImpRNoAllR: return "no imp-R and no all-R";
    case IntuitionisticCondition::NoImpRNoAllL: return "no imp-R and no all-L";
    case IntuitionisticCondition::NoImpLNoOrRNoExR: return "no imp-L, or-R or ex-R";
  }
  return "?";
}

std::optional<IntuitionisticCondition> implies_intuitionistic(const RuleUsageProfile& prof) {
  require_plain(prof);
  const bool impR = uses(prof, RuleId::ImpR);
  const bool orL = uses(prof, RuleId::OrL);
  const bool allR = uses(prof, RuleId::AllR);
  const bool allL = uses(prof, RuleId::AllL);
  const bool impL = uses(prof, RuleId::ImpL);
  const bool orR = uses(prof, RuleId::OrR1) || uses(prof, RuleId::OrR2);
  const bool exR = uses(prof, RuleId::ExR);
  if (!impR && !orL) return IntuitionisticCondition::NoImpRNoOrL;
  if (!impR && !allR) return IntuitionisticCondition::NoImpRNoAllR;
  if (!impR && !allL) return IntuitionisticCondition::NoImpRNoAllL;
  if (!impL && !orR && !exR) return IntuitionisticCondition::NoImpLNoOrRNoExR;
  return std::nullopt;
}

std::optional<int> reduction_conditions(const RuleUsageProfile& prof, ReductionStage stage) {
  require_plain(prof);
  const bool impR = uses(prof, RuleId::ImpR);
  const bool orL = uses(prof, RuleId::OrL);
  const bool allR = uses(prof, RuleId::AllR);
  const bool allL = uses(prof, RuleId::AllL);
  const bool impL = uses(prof, RuleId::ImpL);
  const bool orR = uses(prof, RuleId::OrR1) || uses(prof, RuleId::OrR2);
  const bool exR = uses(prof, RuleId::ExR);
  const bool exL = uses(prof, RuleId::ExL);
  if (stage == ReductionStage::ClassicalToI) {
    if (!allR) return 1;
    if (!impR && !orL) return 2;
    if (!impR && !allL) return 3;
    if (!impL && !orR && !exR) return 4;
    return std::nullopt;
  }
  if (!allR) return 1;
  if ((!orR || !orL) && (!exR || (!orL && !exL))) return 2;
  if (!allL && !impR) return 3;
  return std::nullopt;
}

std::string_view reduction_text(ReductionStage stage, int condition) {
  if (stage == ReductionStage::ClassicalToI) {
    switch (condition) {
      case 1: return "no all-R";
      case 2: return "no imp-R and no or-L";
      case 3: return "no imp-R and no all-L";
      case 4: return "no imp-L, or-R or ex-R";
    }
  } else {
    switch (condition) {
      case 1: return "no all-R";
      case 2: return "(no or-R or no or-L) and (no ex-R or no or-L/ex-L)";
      case 3: return "no all-L and no imp-R";
    }
  }
  return "?";
}

}  // namespace seqcalc
