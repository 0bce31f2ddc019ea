// Proof-to-proof transformations.
#pragma once

#include <stdexcept>
#include <vector>

#include "seqcalc/calculus.hpp"

namespace seqcalc {

class TransformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adds formulas to the end sequent and, as needed, to every sequent above it.
// The result has the same height. Eigenvariables that clash with the new
// formulas are renamed.
Proof weaken(const Proof& p, const std::vector<Formula>& extra_ante,
             const std::vector<Formula>& extra_succ);

// Input: a proof in the starred calculus with contractions (class Cplus).
// Output: a contraction-free proof (class Cstar) of the same end sequent.
Proof eliminate_contractions(const Proof& p);

// Replaces starred rules by their plain counterparts followed by contractions.
Proof expand_starred(const Proof& p);
// Same, without input validation; throws unless the result checks as `target`.
Proof expand_starred(const Proof& p, const ProofClass& target);

// Rewrites a plain classical proof into the starred calculus with
// contractions: and-L, all-L, or-R, ex-R and imp-L become their starred forms.
Proof to_starred_with_contractions(const Proof& p);

// Input: a plain classical proof using neither imp-R nor or-L, or one using
// none of imp-L, or-R, ex-R (the latter with a singleton succedent).
// Output: an intuitionistic proof of the antecedent against one succedent formula.
Proof extract_intuitionistic(const Proof& p);

// <Γ ⊢ F>  becomes  <F ⊃ ⊥, Γ ⊢ F>.
Sequent augment(const Sequent& s);

// Renames constant `from` to `to` in every sequent, witness and eigenvariable.
Proof rename_constant(const Proof& p, const std::string& from, const std::string& to);

// Every constant/function symbol in the proof, including eigenvariables.
std::set<std::string> proof_symbols(const Proof& p);

}  // namespace seqcalc
