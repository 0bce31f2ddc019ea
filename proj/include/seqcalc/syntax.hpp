// Terms, formulas and sequents of first-order logic without equality.
//
// Bound variables are de Bruijn indices, so alpha-equivalent formulas are
// structurally equal. Binder names survive only as printing hints.
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace seqcalc {

enum class TermKind : std::uint8_t { Bound, Var, Const, App, Meta };

struct TermNode;

class Term {
 public:
  static Term bound(int index);
  static Term var(std::string name);
  static Term constant(std::string name);
  // An application with no arguments is normalized to a constant.
  static Term app(std::string function, std::vector<Term> args);
  static Term meta(int id);

  TermKind kind() const;
  const std::string& name() const;  // Var, Const, App
  int index() const;                // Bound
  int meta_id() const;              // Meta
  const std::vector<Term>& args() const;

  bool has_meta() const;
  bool has_var() const;
  // True when no de Bruijn index escapes the term.
  bool is_closed() const;
  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

enum class FormulaKind : std::uint8_t { Top, Bot, Atom, And, Or, Imp, Forall, Exists };

struct FormulaNode;

class Formula {
 public:
  static Formula top();
  static Formula bot();
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  // ~A is A => bot.
  static Formula neg(Formula a);
  // body refers to the bound variable as Term::bound(0).
  static Formula forall(std::string binder_hint, Formula body);
  static Formula exists(std::string binder_hint, Formula body);

  FormulaKind kind() const;
  const std::string& predicate() const;
  const std::vector<Term>& args() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& body() const;
  const std::string& binder_hint() const;

  bool is_atomic() const { return kind() == FormulaKind::Atom; }
  bool is_quantifier() const {
    return kind() == FormulaKind::Forall || kind() == FormulaKind::Exists;
  }
  bool is_binary() const {
    return kind() == FormulaKind::And || kind() == FormulaKind::Or || kind() == FormulaKind::Imp;
  }
  // Logical symbols: connectives and quantifiers (top and bot are not counted).
  int connectives() const;
  bool has_meta() const;
  bool has_quantifier() const;
  bool is_closed() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

// Shift loose de Bruijn indices >= cutoff by delta.
Term shift(const Term& t, int delta, int cutoff = 0);

// [t/x]B for a quantifier body B whose bound variable is index 0.
Formula instantiate(const Formula& body, const Term& t);

// Replace every free occurrence of the named variable x in b with t.
// Capture cannot happen: bound variables are nameless.
Formula substitute(const Term& t, std::string_view x, const Formula& b);

// Turn free Var(x) into the variable bound by an enclosing binder.
Formula abstract(const Formula& b, std::string_view x);

// Replace constant `name` by t (used for eigenvariable renaming).
Term replace_constant(const Term& in, std::string_view name, const Term& t);
Formula replace_constant(const Formula& in, std::string_view name, const Term& t);

// Constants, function names and metavariables ("X<id>") occurring in F.
std::set<std::string> free_symbols(const Formula& f);
std::set<std::string> free_symbols(const Term& t);
// Free named variables.
std::set<std::string> free_vars(const Formula& f);
// Closed, meta-free subterms (every argument position, recursively).
void ground_subterms(const Formula& f, std::set<Term>& out);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_unicode(const Formula& f);

enum class Side : std::uint8_t { Ante, Succ };

// A pair of multisets kept sorted by the structural formula order.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::vector<Formula> ante, std::vector<Formula> succ);

  const std::vector<Formula>& ante() const { return ante_; }
  const std::vector<Formula>& succ() const { return succ_; }
  const std::vector<Formula>& side(Side s) const { return s == Side::Ante ? ante_ : succ_; }

  Sequent with_added(Side s, const Formula& f) const;
  Sequent with_added(Side s, const std::vector<Formula>& fs) const;
  Sequent without(Side s, std::size_t index) const;
  // Remove one copy of f; returns false when absent.
  bool remove_one(Side s, const Formula& f, Sequent& out) const;
  bool contains(Side s, const Formula& f) const;
  std::size_t find(Side s, const Formula& f) const;  // npos when absent

  bool has_quantifier() const;
  bool has_meta() const;
  std::set<std::string> symbols() const;

  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend auto operator<=>(const Sequent&, const Sequent&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Formula> ante_;
  std::vector<Formula> succ_;
};

// Sorted insertion into a canonical multiset.
void multiset_insert(std::vector<Formula>& ms, const Formula& f);
bool multiset_remove(std::vector<Formula>& ms, const Formula& f);
// Multiset sum / difference of canonical multisets.
std::vector<Formula> multiset_sum(const std::vector<Formula>& a, const std::vector<Formula>& b);

std::string to_string(const Sequent& s);

// Generates names that avoid a set of reserved symbols.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}
  void reserve(const std::set<std::string>& names) { reserved_.insert(names.begin(), names.end()); }
  void reserve(const std::string& name) { reserved_.insert(name); }
  std::string fresh(std::string_view prefix);

 private:
  std::set<std::string> reserved_;
  std::size_t counter_ = 0;
};

}  // namespace seqcalc

template <>
struct std::hash<seqcalc::Formula> {
  std::size_t operator()(const seqcalc::Formula& f) const noexcept { return f.hash(); }
};
template <>
struct std::hash<seqcalc::Term> {
  std::size_t operator()(const seqcalc::Term& t) const noexcept { return t.hash(); }
};
