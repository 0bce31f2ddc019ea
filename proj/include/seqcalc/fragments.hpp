// Formula classes with guaranteed agreement between provability relations,
// and decisions over the set of rules a proof uses.
#pragma once

#include <optional>
#include <string_view>

#include "seqcalc/calculus.hpp"

namespace seqcalc {

// F1..F4: goal/clause grammars where classical and intuitionistic provability
// agree. LP_INT / LP_CLS: logic programming languages, intuitionistic and
// classical.
enum class FragmentId { F1, F2, F3, F4, LP_INT, LP_CLS };
enum class Role { Goal, Clause, GPrime };

std::string_view fragment_name(FragmentId f);  // "f1".."f4", "lp-int", "lp-cls"
std::optional<FragmentId> fragment_from_name(std::string_view name);
std::string_view role_name(Role r);
std::optional<Role> role_from_name(std::string_view name);

// Throws std::invalid_argument for GPrime outside LP_CLS.
bool classify(const Formula& f, FragmentId frag, Role role);

// Throws std::invalid_argument unless the succedent is a singleton.
bool fragment_guarantee(const Sequent& s, FragmentId frag);

// Rule restrictions under which a classical proof yields an intuitionistic one.
enum class IntuitionisticCondition {
  NoImpRNoOrL,
  NoImpRNoAllR,
  NoImpRNoAllL,
  NoImpLNoOrRNoExR,
};

std::string_view condition_text(IntuitionisticCondition c);

// First satisfied condition, in declaration order. Throws std::invalid_argument
// if the profile contains starred, restart or multi-succedent rules.
std::optional<IntuitionisticCondition> implies_intuitionistic(const RuleUsageProfile& prof);

enum class ReductionStage { ClassicalToI, IToO };

// 1-based index of the first satisfied condition.
// ClassicalToI (augmented sequent gets an I-proof):
//   1 no all-R; 2 no imp-R, no or-L; 3 no imp-R, no all-L; 4 no imp-L, or-R, ex-R.
// IToO (augmented sequent gets an O-proof):
//   1 no all-R;
//   2 (no or-R or no or-L) and (no ex-R or (no or-L and no ex-L));
//   3 no all-L and no imp-R.
std::optional<int> reduction_conditions(const RuleUsageProfile& prof, ReductionStage stage);

std::string_view reduction_text(ReductionStage stage, int condition);

}  // namespace seqcalc
