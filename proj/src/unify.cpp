#include "seqcalc/unify.hpp"

namespace seqcalc {

const Term* Substitution::lookup(int meta) const {
  auto it = map_.find(meta);
  return it == map_.end() ? nullptr : &it->second;
}

void Substitution::bind(int meta, Term t) { map_.insert_or_assign(meta, std::move(t)); }

Term Substitution::apply(const Term& t) const {
  if (!t.has_meta() || map_.empty()) return t;
  if (t.kind() == TermKind::Meta) {
    const Term* b = lookup(t.meta_id());
    return b ? apply(*b) : t;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(apply(a));
  return Term::app(t.name(), std::move(args));
}

Formula Substitution::apply(const Formula& f) const {
  if (!f.has_meta() || map_.empty()) return f;
  switch (f.kind()) {
    case FormulaKind::Atom: {
      std::vector<Term> args;
      for (const auto& a : f.args()) args.push_back(apply(a));
      return Formula::atom(f.predicate(), std::move(args));
    }
    case FormulaKind::And: return Formula::conj(apply(f.left()), apply(f.right()));
    case FormulaKind::Or: return Formula::disj(apply(f.left()), apply(f.right()));
    case FormulaKind::Imp: return Formula::imp(apply(f.left()), apply(f.right()));
    case FormulaKind::Forall: return Formula::forall(f.binder_hint(), apply(f.body()));
    case FormulaKind::Exists: return Formula::exists(f.binder_hint(), apply(f.body()));
    default: return f;
  }
}

Sequent Substitution::apply(const Sequent& s) const {
  if (map_.empty() || !s.has_meta()) return s;
  std::vector<Formula> a, b;
  for (const auto& f : s.ante()) a.push_back(apply(f));
  for (const auto& f : s.succ()) b.push_back(apply(f));
  return Sequent(std::move(a), std::move(b));
}

bool occurs(int meta, const Term& t, const Substitution& s) {
  if (!t.has_meta()) return false;
  if (t.kind() == TermKind::Meta) {
    if (t.meta_id() == meta) return true;
    const Term* b = s.lookup(t.meta_id());
    return b && occurs(meta, *b, s);
  }
  for (const auto& a : t.args())
    if (occurs(meta, a, s)) return true;
  return false;
}

namespace {

Term walk(const Term& t, const Substitution& s) {
  Term cur = t;
  while (cur.kind() == TermKind::Meta) {
    const Term* b = s.lookup(cur.meta_id());
    if (!b) break;
    cur = *b;
  }
  return cur;
}

bool unify_into(const Term& a0, const Term& b0, Substitution& s) {
  Term a = walk(a0, s);
  Term b = walk(b0, s);
  if (a.kind() == TermKind::Meta && b.kind() == TermKind::Meta && a.meta_id() == b.meta_id())
    return true;
  if (a.kind() == TermKind::Meta) {
    if (occurs(a.meta_id(), b, s)) return false;
    s.bind(a.meta_id(), b);
    return true;
  }
  if (b.kind() == TermKind::Meta) return unify_into(b, a, s);
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Bound: return a.index() == b.index();
    case TermKind::Var:
    case TermKind::Const: return a.name() == b.name();
    case TermKind::App:
      if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!unify_into(a.args()[i], b.args()[i], s)) return false;
      return true;
    default: return false;
  }
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b, const Substitution& under) {
  Substitution s = under;
  if (!unify_into(a, b, s)) return std::nullopt;
  return s;
}

std::optional<Substitution> unify_atoms(const Formula& a, const Formula& b,
                                        const Substitution& under) {
  if (!a.is_atomic() || !b.is_atomic() || a.predicate() != b.predicate() ||
      a.args().size() != b.args().size())
    return std::nullopt;
  Substitution s = under;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!unify_into(a.args()[i], b.args()[i], s)) return std::nullopt;
  return s;
}

void collect_metas(const Term& t, std::set<int>& out) {
  if (!t.has_meta()) return;
  if (t.kind() == TermKind::Meta) out.insert(t.meta_id());
  for (const auto& a : t.args()) collect_metas(a, out);
}

void collect_metas(const Formula& f, std::set<int>& out) {
  if (!f.has_meta()) return;
  switch (f.kind()) {
    case FormulaKind::Atom:
      for (const auto& a : f.args()) collect_metas(a, out);
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      collect_metas(f.left(), out);
      collect_metas(f.right(), out);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      collect_metas(f.body(), out);
      break;
    default:
      break;
  }
}

}  // namespace seqcalc
