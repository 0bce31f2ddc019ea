#include "seqcalc/syntax.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace seqcalc {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

struct TermNode {
  TermKind kind;
  std::string name;
  int index = 0;
  std::vector<Term> args;
  std::size_t hash = 0;
  bool has_meta = false;
  bool has_var = false;
  int loose = 0;  // 1 + largest escaping de Bruijn index, 0 if closed
};

struct FormulaNode {
  FormulaKind kind;
  std::string name;  // predicate or binder hint
  std::vector<Term> args;
  std::vector<Formula> kids;
  std::size_t hash = 0;
  int connectives = 0;
  bool has_meta = false;
  bool has_quantifier = false;
  int loose = 0;
};

// ---------------------------------------------------------------- Term

Term Term::bound(int index) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Bound;
  n->index = index;
  n->loose = index + 1;
  n->hash = mix(1, static_cast<std::size_t>(index));
  return Term(std::move(n));
}

Term Term::var(std::string name) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Var;
  n->hash = mix(2, std::hash<std::string>{}(name));
  n->name = std::move(name);
  n->has_var = true;
  return Term(std::move(n));
}

Term Term::constant(std::string name) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Const;
  n->hash = mix(3, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::app(std::string function, std::vector<Term> args) {
  if (args.empty()) return constant(std::move(function));
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::App;
  std::size_t h = mix(4, std::hash<std::string>{}(function));
  for (const auto& a : args) {
    h = mix(h, a.hash());
    n->has_meta |= a.node_->has_meta;
    n->has_var |= a.node_->has_var;
    n->loose = std::max(n->loose, a.node_->loose);
  }
  n->hash = h;
  n->name = std::move(function);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::meta(int id) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Meta;
  n->index = id;
  n->has_meta = true;
  n->hash = mix(5, static_cast<std::size_t>(id));
  return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
int Term::index() const { return node_->index; }
int Term::meta_id() const { return node_->index; }
const std::vector<Term>& Term::args() const { return node_->args; }
bool Term::has_meta() const { return node_->has_meta; }
bool Term::has_var() const { return node_->has_var; }
bool Term::is_closed() const { return node_->loose == 0; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const TermNode& x = *a.node_;
  const TermNode& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case TermKind::Bound:
    case TermKind::Meta:
      return x.index <=> y.index;
    case TermKind::Var:
    case TermKind::Const:
      return x.name <=> y.name;
    case TermKind::App:
      if (auto c = x.name <=> y.name; c != 0) return c;
      if (auto c = x.args.size() <=> y.args.size(); c != 0) return c;
      for (std::size_t i = 0; i < x.args.size(); ++i)
        if (auto c = x.args[i] <=> y.args[i]; c != 0) return c;
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Formula

namespace {

std::shared_ptr<FormulaNode> make_node(FormulaKind k) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->hash = mix(11, static_cast<std::size_t>(k));
  return n;
}

}  // namespace

Formula Formula::top() {
  static const Formula t(make_node(FormulaKind::Top));
  return t;
}

Formula Formula::bot() {
  static const Formula b(make_node(FormulaKind::Bot));
  return b;
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  auto n = make_node(FormulaKind::Atom);
  std::size_t h = mix(n->hash, std::hash<std::string>{}(predicate));
  for (const auto& a : args) {
    h = mix(h, a.hash());
    n->has_meta |= a.has_meta();
  }
  for (const auto& a : args) {
    // loose index bookkeeping: a closed term contributes nothing
    if (!a.is_closed()) {
      int deepest = 0;
      std::function<void(const Term&)> walk = [&](const Term& t) {
        if (t.kind() == TermKind::Bound) deepest = std::max(deepest, t.index() + 1);
        for (const auto& s : t.args()) walk(s);
      };
      walk(a);
      n->loose = std::max(n->loose, deepest);
    }
  }
  n->hash = h;
  n->name = std::move(predicate);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = make_node(FormulaKind::And);
  n->hash = mix(mix(n->hash, a.hash()), b.hash());
  n->connectives = 1 + a.connectives() + b.connectives();
  n->has_meta = a.has_meta() || b.has_meta();
  n->has_quantifier = a.has_quantifier() || b.has_quantifier();
  n->loose = std::max(a.node_->loose, b.node_->loose);
  n->kids = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
  auto n = make_node(FormulaKind::Or);
  n->hash = mix(mix(n->hash, a.hash()), b.hash());
  n->connectives = 1 + a.connectives() + b.connectives();
  n->has_meta = a.has_meta() || b.has_meta();
  n->has_quantifier = a.has_quantifier() || b.has_quantifier();
  n->loose = std::max(a.node_->loose, b.node_->loose);
  n->kids = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::imp(Formula a, Formula b) {
  auto n = make_node(FormulaKind::Imp);
  n->hash = mix(mix(n->hash, a.hash()), b.hash());
  n->connectives = 1 + a.connectives() + b.connectives();
  n->has_meta = a.has_meta() || b.has_meta();
  n->has_quantifier = a.has_quantifier() || b.has_quantifier();
  n->loose = std::max(a.node_->loose, b.node_->loose);
  n->kids = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::neg(Formula a) { return imp(std::move(a), bot()); }

Formula Formula::forall(std::string binder_hint, Formula body) {
  auto n = make_node(FormulaKind::Forall);
  n->hash = mix(n->hash, body.hash());
  n->connectives = 1 + body.connectives();
  n->has_meta = body.has_meta();
  n->has_quantifier = true;
  n->loose = std::max(0, body.node_->loose - 1);
  n->name = std::move(binder_hint);
  n->kids = {std::move(body)};
  return Formula(std::move(n));
}

Formula Formula::exists(std::string binder_hint, Formula body) {
  auto n = make_node(FormulaKind::Exists);
  n->hash = mix(n->hash, body.hash());
  n->connectives = 1 + body.connectives();
  n->has_meta = body.has_meta();
  n->has_quantifier = true;
  n->loose = std::max(0, body.node_->loose - 1);
  n->name = std::move(binder_hint);
  n->kids = {std::move(body)};
  return Formula(std::move(n));
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::predicate() const { return node_->name; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const Formula& Formula::left() const { return node_->kids.at(0); }
const Formula& Formula::right() const { return node_->kids.at(1); }
const Formula& Formula::body() const { return node_->kids.at(0); }
const std::string& Formula::binder_hint() const { return node_->name; }
int Formula::connectives() const { return node_->connectives; }
bool Formula::has_meta() const { return node_->has_meta; }
bool Formula::has_quantifier() const { return node_->has_quantifier; }
bool Formula::is_closed() const { return node_->loose == 0; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const FormulaNode& x = *a.node_;
  const FormulaNode& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case FormulaKind::Top:
    case FormulaKind::Bot:
      return std::strong_ordering::equal;
    case FormulaKind::Atom:
      if (auto c = x.name <=> y.name; c != 0) return c;
      if (auto c = x.args.size() <=> y.args.size(); c != 0) return c;
      for (std::size_t i = 0; i < x.args.size(); ++i)
        if (auto c = x.args[i] <=> y.args[i]; c != 0) return c;
      return std::strong_ordering::equal;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      if (auto c = x.kids[0] <=> y.kids[0]; c != 0) return c;
      return x.kids[1] <=> y.kids[1];
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return x.kids[0] <=> y.kids[0];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- substitution

namespace {

Formula rebuild(const Formula& f, const std::function<Term(const Term&, int)>& on_term, int depth);

Formula rebuild_children(const Formula& f, const std::function<Term(const Term&, int)>& on_term,
                         int depth) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Bot:
      return f;
    case FormulaKind::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(on_term(a, depth));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case FormulaKind::And:
      return Formula::conj(rebuild(f.left(), on_term, depth), rebuild(f.right(), on_term, depth));
    case FormulaKind::Or:
      return Formula::disj(rebuild(f.left(), on_term, depth), rebuild(f.right(), on_term, depth));
    case FormulaKind::Imp:
      return Formula::imp(rebuild(f.left(), on_term, depth), rebuild(f.right(), on_term, depth));
    case FormulaKind::Forall:
      return Formula::forall(f.binder_hint(), rebuild(f.body(), on_term, depth + 1));
    case FormulaKind::Exists:
      return Formula::exists(f.binder_hint(), rebuild(f.body(), on_term, depth + 1));
  }
  return f;
}

Formula rebuild(const Formula& f, const std::function<Term(const Term&, int)>& on_term, int depth) {
  return rebuild_children(f, on_term, depth);
}

Term map_term(const Term& t, const std::function<std::optional<Term>(const Term&)>& leaf) {
  if (auto r = leaf(t)) return *r;
  if (t.kind() != TermKind::App) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const auto& a : t.args()) {
    args.push_back(map_term(a, leaf));
    changed |= !(args.back() == a);
  }
  if (!changed) return t;
  return Term::app(t.name(), std::move(args));
}

}  // namespace

Term shift(const Term& t, int delta, int cutoff) {
  if (t.is_closed() || delta == 0) return t;
  return map_term(t, [&](const Term& s) -> std::optional<Term> {
    if (s.kind() == TermKind::Bound && s.index() >= cutoff) return Term::bound(s.index() + delta);
    return std::nullopt;
  });
}

Formula instantiate(const Formula& body, const Term& t) {
  return rebuild(
      body,
      [&](const Term& term, int depth) {
        if (term.is_closed()) return term;
        return map_term(term, [&](const Term& s) -> std::optional<Term> {
          if (s.kind() != TermKind::Bound) return std::nullopt;
          if (s.index() == depth) return shift(t, depth);
          if (s.index() > depth) return Term::bound(s.index() - 1);
          return s;
        });
      },
      0);
}

Formula abstract(const Formula& b, std::string_view x) {
  // Indices pointing past the new binder move out by one.
  return rebuild(
      b,
      [&](const Term& term, int depth) {
        return map_term(term, [&](const Term& s) -> std::optional<Term> {
          if (s.kind() == TermKind::Var && s.name() == x) return Term::bound(depth);
          if (s.kind() == TermKind::Bound && s.index() >= depth) return Term::bound(s.index() + 1);
          return std::nullopt;
        });
      },
      0);
}

Formula substitute(const Term& t, std::string_view x, const Formula& b) {
  return instantiate(abstract(b, x), t);
}

Term replace_constant(const Term& in, std::string_view name, const Term& t) {
  return map_term(in, [&](const Term& s) -> std::optional<Term> {
    if (s.kind() == TermKind::Const && s.name() == name) return t;
    return std::nullopt;
  });
}

Formula replace_constant(const Formula& in, std::string_view name, const Term& t) {
  return rebuild(
      in, [&](const Term& term, int) { return replace_constant(term, name, t); }, 0);
}

namespace {

void term_symbols(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Const:
    case TermKind::App:
      out.insert(t.name());
      break;
    case TermKind::Meta:
      out.insert("X" + std::to_string(t.meta_id()));
      break;
    default:
      break;
  }
  for (const auto& a : t.args()) term_symbols(a, out);
}

template <typename F>
void for_each_atom(const Formula& f, F&& fn) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      fn(f);
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      for_each_atom(f.left(), fn);
      for_each_atom(f.right(), fn);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      for_each_atom(f.body(), fn);
      break;
    default:
      break;
  }
}

}  // namespace

std::set<std::string> free_symbols(const Term& t) {
  std::set<std::string> out;
  term_symbols(t, out);
  return out;
}

std::set<std::string> free_symbols(const Formula& f) {
  std::set<std::string> out;
  for_each_atom(f, [&](const Formula& a) {
    for (const auto& t : a.args()) term_symbols(t, out);
  });
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.kind() == TermKind::Var) out.insert(t.name());
    for (const auto& a : t.args()) walk(a);
  };
  for_each_atom(f, [&](const Formula& a) {
    for (const auto& t : a.args()) walk(t);
  });
  return out;
}

void ground_subterms(const Formula& f, std::set<Term>& out) {
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.is_closed() && !t.has_meta() && !t.has_var()) out.insert(t);
    for (const auto& a : t.args()) walk(a);
  };
  for_each_atom(f, [&](const Formula& a) {
    for (const auto& t : a.args()) walk(t);
  });
}

// ---------------------------------------------------------------- printing

namespace {

struct Printer {
  bool unicode = false;
  std::vector<std::string> scope;  // back() is de Bruijn index 0

  std::string term(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Bound: {
        auto i = static_cast<std::size_t>(t.index());
        if (i < scope.size()) return scope[scope.size() - 1 - i];
        return "#" + std::to_string(t.index());
      }
      case TermKind::Var:
      case TermKind::Const:
        return t.name();
      case TermKind::Meta:
        return "X" + std::to_string(t.meta_id());
      case TermKind::App: {
        std::string s = t.name() + "(";
        for (std::size_t i = 0; i < t.args().size(); ++i) {
          if (i) s += ", ";
          s += term(t.args()[i]);
        }
        return s + ")";
      }
    }
    return {};
  }

  std::string binder_name(const Formula& q) const {
    std::set<std::string> avoid = free_symbols(q.body());
    for (const auto& v : free_vars(q.body())) avoid.insert(v);
    avoid.insert(scope.begin(), scope.end());
    std::string base = q.binder_hint().empty() ? "x" : q.binder_hint();
    if (!avoid.count(base) && base != "top" && base != "bot" && base != "forall" &&
        base != "exists")
      return base;
    for (int i = 0;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!avoid.count(cand)) return cand;
    }
  }

  // prec: imp 1, or 2, and 3, unary 4
  std::string formula(const Formula& f, int min_prec, bool rightmost) {
    switch (f.kind()) {
      case FormulaKind::Top:
        return unicode ? "⊤" : "top";
      case FormulaKind::Bot:
        return unicode ? "⊥" : "bot";
      case FormulaKind::Atom: {
        std::string s = f.predicate();
        if (!f.args().empty()) {
          s += "(";
          for (std::size_t i = 0; i < f.args().size(); ++i) {
            if (i) s += ", ";
            s += term(f.args()[i]);
          }
          s += ")";
        }
        return s;
      }
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        std::string name = binder_name(f);
        std::string head;
        if (unicode)
          head = std::string(f.kind() == FormulaKind::Forall ? "∀" : "∃") + name + " ";
        else
          head = std::string(f.kind() == FormulaKind::Forall ? "forall " : "exists ") + name + ". ";
        scope.push_back(name);
        std::string inner = formula(f.body(), 1, true);
        scope.pop_back();
        if (!rightmost) return "(" + head + inner + ")";
        return head + inner;
      }
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Imp: {
        int prec = f.kind() == FormulaKind::Imp ? 1 : f.kind() == FormulaKind::Or ? 2 : 3;
        bool parens = prec < min_prec;
        bool rm = parens ? true : rightmost;
        std::string op;
        if (f.kind() == FormulaKind::Imp) op = unicode ? " ⊃ " : " => ";
        if (f.kind() == FormulaKind::Or) op = unicode ? " ∨ " : " | ";
        if (f.kind() == FormulaKind::And) op = unicode ? " ∧ " : " & ";
        std::string l, r;
        if (f.kind() == FormulaKind::Imp) {
          l = formula(f.left(), 2, false);
          r = formula(f.right(), 1, rm);
        } else {
          l = formula(f.left(), prec, false);
          r = formula(f.right(), prec + 1, rm);
        }
        std::string s = l + op + r;
        return parens ? "(" + s + ")" : s;
      }
    }
    return {};
  }
};

}  // namespace

std::string to_string(const Term& t) { return Printer{}.term(t); }

std::string to_string(const Formula& f) {
  Printer p;
  return p.formula(f, 1, true);
}

std::string to_unicode(const Formula& f) {
  Printer p;
  p.unicode = true;
  return p.formula(f, 1, true);
}

// ---------------------------------------------------------------- sequents

void multiset_insert(std::vector<Formula>& ms, const Formula& f) {
  ms.insert(std::upper_bound(ms.begin(), ms.end(), f), f);
}

bool multiset_remove(std::vector<Formula>& ms, const Formula& f) {
  auto it = std::lower_bound(ms.begin(), ms.end(), f);
  if (it == ms.end() || !(*it == f)) return false;
  ms.erase(it);
  return true;
}

std::vector<Formula> multiset_sum(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::vector<Formula> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Sequent::Sequent(std::vector<Formula> ante, std::vector<Formula> succ)
    : ante_(std::move(ante)), succ_(std::move(succ)) {
  std::sort(ante_.begin(), ante_.end());
  std::sort(succ_.begin(), succ_.end());
}

Sequent Sequent::with_added(Side s, const Formula& f) const {
  Sequent out = *this;
  multiset_insert(s == Side::Ante ? out.ante_ : out.succ_, f);
  return out;
}

Sequent Sequent::with_added(Side s, const std::vector<Formula>& fs) const {
  Sequent out = *this;
  auto& v = s == Side::Ante ? out.ante_ : out.succ_;
  for (const auto& f : fs) multiset_insert(v, f);
  return out;
}

Sequent Sequent::without(Side s, std::size_t index) const {
  Sequent out = *this;
  auto& v = s == Side::Ante ? out.ante_ : out.succ_;
  if (index >= v.size()) throw std::out_of_range("sequent index");
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

bool Sequent::remove_one(Side s, const Formula& f, Sequent& out) const {
  out = *this;
  return multiset_remove(s == Side::Ante ? out.ante_ : out.succ_, f);
}

bool Sequent::contains(Side s, const Formula& f) const { return find(s, f) != npos; }

std::size_t Sequent::find(Side s, const Formula& f) const {
  const auto& v = side(s);
  auto it = std::lower_bound(v.begin(), v.end(), f);
  if (it == v.end() || !(*it == f)) return npos;
  return static_cast<std::size_t>(it - v.begin());
}

bool Sequent::has_quantifier() const {
  for (const auto& f : ante_)
    if (f.has_quantifier()) return true;
  for (const auto& f : succ_)
    if (f.has_quantifier()) return true;
  return false;
}

bool Sequent::has_meta() const {
  for (const auto& f : ante_)
    if (f.has_meta()) return true;
  for (const auto& f : succ_)
    if (f.has_meta()) return true;
  return false;
}

std::set<std::string> Sequent::symbols() const {
  std::set<std::string> out;
  for (const auto& f : ante_) {
    auto s = free_symbols(f);
    out.insert(s.begin(), s.end());
  }
  for (const auto& f : succ_) {
    auto s = free_symbols(f);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.ante().size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.ante()[i]);
  }
  out += out.empty() ? "|-" : " |-";
  for (std::size_t i = 0; i < s.succ().size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(s.succ()[i]);
  }
  return out;
}

std::string NameSupply::fresh(std::string_view prefix) {
  for (;;) {
    std::string cand = std::string(prefix) + std::to_string(counter_++);
    if (!reserved_.count(cand)) {
      reserved_.insert(cand);
      return cand;
    }
  }
}

}  // namespace seqcalc
