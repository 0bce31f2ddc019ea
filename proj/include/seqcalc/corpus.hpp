// Golden corpus files: one sequent per line with expected verdicts.
//
//   name ; sequent ; C=yes|no ; I=yes|no ; O=yes|no [; R=yes|no] [; A=yes|no]
//
// C, I and O are the classical, intuitionistic and uniform relations. R runs
// the restart search with the antecedent as context and the single succedent
// formula as goal. A runs intuitionistic search on the sequent extended by
// F => bot in the antecedent. Blank lines and text after '#' are ignored.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqcalc/search.hpp"
#include "seqcalc/syntax.hpp"

namespace seqcalc {

enum class Relation { C, I, O, R, A };

std::string_view relation_name(Relation r);

struct CorpusEntry {
  std::string name;
  Sequent sequent;
  std::string source;  // the sequent text as written
  int line = 0;
  std::map<Relation, bool> expected;
};

class CorpusError : public std::runtime_error {
 public:
  CorpusError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

std::vector<CorpusEntry> parse_corpus(std::string_view text);

struct RelationResult {
  Relation relation;
  bool expected;
  Verdict verdict;
  std::size_t nodes;
  bool matches() const { return expected == (verdict == Verdict::Proved); }
};

struct EntryResult {
  std::string name;
  std::vector<RelationResult> relations;
  bool matches() const;
};

SearchOutcome run_relation(const Sequent& s, Relation r, const SearchLimits& limits);

// Runs every expectation of every entry; results are sorted by entry name.
std::vector<EntryResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                    const SearchLimits& limits = {}, unsigned workers = 1);

}  // namespace seqcalc
