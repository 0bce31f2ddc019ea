// Metavariable substitutions and syntactic unification.
#pragma once

#include <map>
#include <optional>

#include "seqcalc/syntax.hpp"

namespace seqcalc {

// Triangular bindings; apply() resolves chains completely, so applying the
// result of apply() again changes nothing.
class Substitution {
 public:
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<int, Term>& bindings() const { return map_; }
  const Term* lookup(int meta) const;
  void bind(int meta, Term t);

  Term apply(const Term& t) const;
  Formula apply(const Formula& f) const;
  Sequent apply(const Sequent& s) const;

 private:
  std::map<int, Term> map_;
};

bool occurs(int meta, const Term& t, const Substitution& s);

// Most general unifier extending `under`, with occurs check.
std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& under);

// Atoms with the same predicate and arity, argumentwise.
std::optional<Substitution> unify_atoms(const Formula& a, const Formula& b,
                                        const Substitution& under);

// Metavariable ids occurring in t / f.
void collect_metas(const Term& t, std::set<int>& out);
void collect_metas(const Formula& f, std::set<int>& out);

}  // namespace seqcalc
