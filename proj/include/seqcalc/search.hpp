// Bounded proof search: classical (starred calculus with metavariables),
// intuitionistic, uniform and restart-goal uniform provability.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqcalc/calculus.hpp"
#include "seqcalc/syntax.hpp"

namespace seqcalc {

struct SearchLimits {
  int depth = 40;        // rule applications per branch
  int qbudget = 3;       // quantifier expansion rounds per branch
  std::size_t node_budget = 1000000;
  bool strengthened_axioms = true;
};

class LimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SearchMode { Classical, Intuitionistic, Uniform };

enum class Verdict { Proved, NotProvedWithinLimits, Refuted };

std::string_view verdict_name(Verdict v);
std::string_view mode_name(SearchMode m);
std::optional<SearchMode> mode_from_name(std::string_view name);

struct SearchOptions {
  bool herbrandize = false;    // classical only
  bool keep_starred = false;   // emit the starred-calculus proof as found
};

struct SearchOutcome {
  Verdict verdict = Verdict::NotProvedWithinLimits;
  std::optional<Proof> proof;
  ProofClass cls;                    // class the proof checks against
  Sequent input;                     // the sequent that was asked for
  std::optional<Sequent> herbrand;   // searched form when herbrandized
  std::size_t nodes = 0;

  bool proved() const { return verdict == Verdict::Proved; }
};

SearchOutcome prove(const Sequent& s, SearchMode mode, const SearchLimits& limits = {},
                    const SearchOptions& options = {});

// Uniform search for <gamma |- goal> in which atomic goals may restart with goal.
SearchOutcome prove_restart(const std::vector<Formula>& gamma, const Formula& goal,
                            const SearchLimits& limits = {}, const SearchOptions& options = {});

// Proof of a sequent holding f on both sides, built from atomic axioms only.
// Singleton-succedent sequents get an intuitionistic construction unless a
// classical target class is given.
Proof identity_proof(const Sequent& s, const Formula& f, NameSupply& names);
Proof identity_proof(const Sequent& s, const Formula& f, NameSupply& names, ClassKind target);

// Replaces every axiom that is not an atomic, top or bot axiom by an identity proof.
Proof expand_identities(const Proof& p);
Proof expand_identities(const Proof& p, ClassKind target);

}  // namespace seqcalc
