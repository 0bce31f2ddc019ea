// Static removal of strong quantifiers for classical search.
#pragma once

#include <string>
#include <vector>

#include "seqcalc/syntax.hpp"

namespace seqcalc {

struct HerbrandResult {
  Sequent sequent;
  std::vector<std::string> functions;  // introduced symbols, in order
};

// Positive universals and negative existentials become h0, h1, ... applied to
// the weak-quantifier variables in whose scope they occur. Antecedent
// formulas are negative, succedent formulas positive.
HerbrandResult herbrandize_with_info(const Sequent& s);
Sequent herbrandize(const Sequent& s);

}  // namespace seqcalc
