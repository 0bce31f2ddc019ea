#include "seqcalc/search.hpp"

#include <functional>
#include <map>
#include <set>

#include "seqcalc/herbrand.hpp"
#include "seqcalc/transform.hpp"
#include "seqcalc/unify.hpp"

namespace seqcalc {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Proved: return "proved";
    case Verdict::NotProvedWithinLimits: return "not-proved-within-limits";
    case Verdict::Refuted: return "refuted";
  }
  return "?";
}

std::string_view mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::Classical: return "classical";
    case SearchMode::Intuitionistic: return "intuitionistic";
    case SearchMode::Uniform: return "uniform";
  }
  return "?";
}

std::optional<SearchMode> mode_from_name(std::string_view name) {
  if (name == "classical" || name == "C") return SearchMode::Classical;
  if (name == "intuitionistic" || name == "I") return SearchMode::Intuitionistic;
  if (name == "uniform" || name == "O") return SearchMode::Uniform;
  return std::nullopt;
}

namespace {

using R = RuleId;

Proof axiom(const Sequent& s) { return make_proof(R::Axiom, s, std::nullopt); }

Proof node1(R rule, const Sequent& s, Side side, const Formula& f, Proof prem,
            std::optional<Term> witness = std::nullopt, std::optional<std::string> eigen = std::nullopt) {
  return make_proof(rule, s, locate(s, side, f), {std::move(prem)}, std::move(witness), std::move(eigen));
}

Proof node2(R rule, const Sequent& s, Side side, const Formula& f, Proof a, Proof b) {
  return make_proof(rule, s, locate(s, side, f), {std::move(a), std::move(b)});
}

Sequent minus(const Sequent& s, Side side, const Formula& f) {
  Sequent out;
  s.remove_one(side, f, out);
  return out;
}

struct Budget {
  std::size_t cap;
  std::size_t nodes = 0;
  bool exhausted = false;

  bool tick() {
    if (++nodes > cap) exhausted = true;
    return !exhausted;
  }
};

void validate(const SearchLimits& l) {
  if (l.depth <= 0 || l.qbudget <= 0 || l.node_budget == 0)
    throw LimitError("search limits must be positive");
}

}  // namespace

// ---------------------------------------------------------------- identities

namespace {

Proof identity_impl(const Sequent& s, const Formula& f, NameSupply& names, bool single) {
  if (is_axiom(s, false)) return axiom(s);
  const Sequent sr = minus(s, Side::Succ, f);
  const Sequent sl = minus(s, Side::Ante, f);
  switch (f.kind()) {
    case FormulaKind::And: {
      auto branch = [&](const Formula& part) {
        Sequent a = sr.with_added(Side::Succ, part);
        Sequent b = minus(a, Side::Ante, f).with_added(Side::Ante, {f.left(), f.right()});
        return node1(R::AndLStar, a, Side::Ante, f, identity_impl(b, part, names, single));
      };
      return node2(R::AndR, s, Side::Succ, f, branch(f.left()), branch(f.right()));
    }
    case FormulaKind::Or: {
      if (single) {
        auto branch = [&](const Formula& part, R inj) {
          Sequent a = sl.with_added(Side::Ante, part);
          Sequent b = minus(a, Side::Succ, f).with_added(Side::Succ, part);
          return node1(inj, a, Side::Succ, f, identity_impl(b, part, names, single));
        };
        return node2(R::OrL, s, Side::Ante, f, branch(f.left(), R::OrR1), branch(f.right(), R::OrR2));
      }
      Sequent a = sr.with_added(Side::Succ, {f.left(), f.right()});
      Sequent l = minus(a, Side::Ante, f).with_added(Side::Ante, f.left());
      Sequent r = minus(a, Side::Ante, f).with_added(Side::Ante, f.right());
      Proof inner = node2(R::OrL, a, Side::Ante, f, identity_impl(l, f.left(), names, single),
                          identity_impl(r, f.right(), names, single));
      return node1(R::OrRStar, s, Side::Succ, f, std::move(inner));
    }
    case FormulaKind::Imp: {
      Sequent a = sr.with_added(Side::Ante, f.left()).with_added(Side::Succ, f.right());
      Sequent rest = minus(a, Side::Ante, f);
      Sequent right = rest.with_added(Side::Ante, f.right());
      Proof inner;
      if (single) {
        Sequent left(a.ante(), {f.left()});
        inner = node2(R::ImpLStarI, a, Side::Ante, f, identity_impl(left, f.left(), names, single),
                      identity_impl(right, f.right(), names, single));
      } else {
        Sequent left = rest.with_added(Side::Succ, f.left());
        inner = node2(R::ImpLStar, a, Side::Ante, f, identity_impl(left, f.left(), names, single),
                      identity_impl(right, f.right(), names, single));
      }
      return node1(R::ImpR, s, Side::Succ, f, std::move(inner));
    }
    case FormulaKind::Forall: {
      std::string c = names.fresh("c");
      const Formula inst = instantiate(f.body(), Term::constant(c));
      Sequent a = sr.with_added(Side::Succ, inst);
      Sequent b = a.with_added(Side::Ante, inst);
      Proof inner = node1(R::AllLStar, a, Side::Ante, f, identity_impl(b, inst, names, single),
                          Term::constant(c));
      return node1(R::AllR, s, Side::Succ, f, std::move(inner), std::nullopt, c);
    }
    case FormulaKind::Exists: {
      std::string c = names.fresh("c");
      const Formula inst = instantiate(f.body(), Term::constant(c));
      Sequent a = sl.with_added(Side::Ante, inst);
      Proof inner;
      if (single) {
        Sequent b(a.ante(), {inst});
        inner = node1(R::ExR, a, Side::Succ, f, identity_impl(b, inst, names, single), Term::constant(c));
      } else {
        Sequent b = a.with_added(Side::Succ, inst);
        inner = node1(R::ExRStar, a, Side::Succ, f, identity_impl(b, inst, names, single), Term::constant(c));
      }
      return node1(R::ExL, s, Side::Ante, f, std::move(inner), std::nullopt, c);
    }
    default:
      throw std::logic_error("identity_proof: no identity for " + to_string(f));
  }
}

}  // namespace

Proof identity_proof(const Sequent& s, const Formula& f, NameSupply& names) {
  return identity_impl(s, f, names, s.succ().size() == 1);
}

Proof identity_proof(const Sequent& s, const Formula& f, NameSupply& names, ClassKind target) {
  const bool single = target == ClassKind::I || target == ClassKind::Istar;
  if (single && s.succ().size() != 1) throw std::invalid_argument("identity_proof: succedent is not a singleton");
  return identity_impl(s, f, names, single);
}

namespace {

Proof expand_identities_impl(const Proof& p, NameSupply& names, std::optional<ClassKind> target) {
  if (p.rule == R::Axiom) {
    if (is_axiom(p.conclusion, false)) return p;
    for (const auto& a : p.conclusion.ante())
      if (p.conclusion.contains(Side::Succ, a))
        return target ? identity_proof(p.conclusion, a, names, *target) : identity_proof(p.conclusion, a, names);
    throw std::logic_error("expand_identities: not an axiom: " + to_string(p.conclusion));
  }
  std::vector<Proof> prem;
  for (const auto& q : p.premises) prem.push_back(expand_identities_impl(q, names, target));
  return make_proof(p.rule, p.conclusion, p.principal, std::move(prem), p.witness, p.eigen);
}

}  // namespace

Proof expand_identities(const Proof& p) {
  NameSupply names(proof_symbols(p));
  return expand_identities_impl(p, names, std::nullopt);
}

Proof expand_identities(const Proof& p, ClassKind target) {
  NameSupply names(proof_symbols(p));
  return expand_identities_impl(p, names, target);
}

// ---------------------------------------------------------------- classical search

namespace {

struct ClassicalState {
  Substitution subst;
  // Metavariables that must never be bound to a term containing the eigenvariable.
  std::vector<std::pair<std::set<int>, std::string>> eigen_constraints;
};

using Continuation = std::function<bool(const ClassicalState&, Proof)>;

class ClassicalSearch {
 public:
  ClassicalSearch(const SearchLimits& limits, NameSupply& names, Budget& budget)
      : limits_(limits), names_(names), budget_(budget) {}

  bool depth_limited = false;
  bool rounds_limited = false;

  bool solve(const Sequent& s0, int depth, int rounds, const ClassicalState& st,
             const Continuation& k) {
    if (!budget_.tick()) return false;
    if (depth > limits_.depth) {
      depth_limited = true;
      return false;
    }
    const Sequent s = st.subst.apply(s0);
    if (auto closed = close_without_bindings(s)) return k(st, std::move(*closed));

    if (auto step = eager_step(s)) return apply_eager(s, *step, depth, rounds, st, k);

    // Saturated: try to close by unification, then expand quantifiers.
    for (const auto& a : s.ante()) {
      if (!a.is_atomic()) continue;
      for (const auto& b : s.succ()) {
        if (!b.is_atomic() || a.predicate() != b.predicate() || a.args().size() != b.args().size())
          continue;
        if (!a.has_meta() && !b.has_meta()) continue;
        auto u = unify_atoms(a, b, st.subst);
        if (!u) continue;
        ClassicalState next{std::move(*u), st.eigen_constraints};
        if (!respects_eigens(next)) continue;
        if (k(next, axiom(s))) return true;
        if (budget_.exhausted) return false;
      }
    }
    std::vector<std::pair<Side, Formula>> quants;
    for (const auto& a : s.ante())
      if (a.kind() == FormulaKind::Forall) quants.emplace_back(Side::Ante, a);
    for (const auto& b : s.succ())
      if (b.kind() == FormulaKind::Exists) quants.emplace_back(Side::Succ, b);
    if (quants.empty()) return false;
    if (rounds == 0) {
      rounds_limited = true;
      return false;
    }
    std::vector<Sequent> chain{s};
    std::vector<Term> witnesses;
    for (const auto& [side, q] : quants) {
      Term x = Term::meta(next_meta_++);
      witnesses.push_back(x);
      chain.push_back(chain.back().with_added(side, instantiate(q.body(), x)));
    }
    const int n = static_cast<int>(quants.size());
    return solve(chain.back(), depth + n, rounds - 1, st,
                 [&](const ClassicalState& st2, Proof p) {
                   for (int i = n - 1; i >= 0; --i) {
                     R rule = quants[i].first == Side::Ante ? R::AllLStar : R::ExRStar;
                     p = node1(rule, chain[i], quants[i].first, quants[i].second, std::move(p),
                               witnesses[i]);
                   }
                   return k(st2, std::move(p));
                 });
  }

 private:
  struct Step {
    R rule;
    Side side;
    Formula f;
  };

  std::optional<Proof> close_without_bindings(const Sequent& s) const {
    if (is_axiom(s, limits_.strengthened_axioms)) return axiom(s);
    if (s.contains(Side::Ante, Formula::bot()) && !s.succ().empty()) {
      const Formula d = s.succ().front();
      Sequent prem = minus(s, Side::Succ, d).with_added(Side::Succ, Formula::bot());
      return node1(R::BotR, s, Side::Succ, d, axiom(prem));
    }
    return std::nullopt;
  }

  static std::optional<Step> eager_step(const Sequent& s) {
    static const std::vector<std::tuple<R, Side, FormulaKind>> order = {
        {R::AndLStar, Side::Ante, FormulaKind::And}, {R::ExL, Side::Ante, FormulaKind::Exists},
        {R::OrRStar, Side::Succ, FormulaKind::Or},   {R::ImpR, Side::Succ, FormulaKind::Imp},
        {R::AllR, Side::Succ, FormulaKind::Forall},  {R::OrL, Side::Ante, FormulaKind::Or},
        {R::ImpLStar, Side::Ante, FormulaKind::Imp}, {R::AndR, Side::Succ, FormulaKind::And},
    };
    for (const auto& [rule, side, kind] : order)
      for (const auto& f : s.side(side))
        if (f.kind() == kind) return Step{rule, side, f};
    return std::nullopt;
  }

  bool apply_eager(const Sequent& s, const Step& step, int depth, int rounds,
                   const ClassicalState& st, const Continuation& k) {
    const Formula& f = step.f;
    const Sequent rest = minus(s, step.side, f);
    auto one = [&](const Sequent& prem, const ClassicalState& st1,
                   std::optional<std::string> eigen) {
      return solve(prem, depth + 1, rounds, st1, [&](const ClassicalState& st2, Proof p) {
        return k(st2, node1(step.rule, s, step.side, f, std::move(p), std::nullopt, eigen));
      });
    };
    auto two = [&](const Sequent& a, const Sequent& b) {
      return solve(a, depth + 1, rounds, st, [&](const ClassicalState& st2, Proof pa) {
        return solve(b, depth + 1, rounds, st2, [&](const ClassicalState& st3, Proof pb) {
          return k(st3, node2(step.rule, s, step.side, f, pa, std::move(pb)));
        });
      });
    };
    switch (step.rule) {
      case R::AndLStar: return one(rest.with_added(Side::Ante, {f.left(), f.right()}), st, std::nullopt);
      case R::OrRStar: return one(rest.with_added(Side::Succ, {f.left(), f.right()}), st, std::nullopt);
      case R::ImpR:
        return one(rest.with_added(Side::Ante, f.left()).with_added(Side::Succ, f.right()), st,
                   std::nullopt);
      case R::ExL:
      case R::AllR: {
        std::string c = names_.fresh("c");
        ClassicalState st1 = st;
        if (s.has_meta()) {
          std::set<int> metas;
          for (const auto& g : s.ante()) collect_metas(g, metas);
          for (const auto& g : s.succ()) collect_metas(g, metas);
          st1.eigen_constraints.emplace_back(std::move(metas), c);
        }
        const Formula inst = instantiate(f.body(), Term::constant(c));
        return one(rest.with_added(step.side, inst), st1, c);
      }
      case R::OrL:
        return two(rest.with_added(Side::Ante, f.left()), rest.with_added(Side::Ante, f.right()));
      case R::ImpLStar:
        return two(rest.with_added(Side::Succ, f.left()), rest.with_added(Side::Ante, f.right()));
      case R::AndR:
        return two(rest.with_added(Side::Succ, f.left()), rest.with_added(Side::Succ, f.right()));
      default:
        throw std::logic_error("unexpected eager rule");
    }
  }

  static bool respects_eigens(const ClassicalState& st) {
    for (const auto& [metas, c] : st.eigen_constraints)
      for (int m : metas)
        if (free_symbols(st.subst.apply(Term::meta(m))).count(c)) return false;
    return true;
  }

  const SearchLimits& limits_;
  NameSupply& names_;
  Budget& budget_;
  int next_meta_ = 0;
};

// Applies the final substitution, closes leftover metavariables with one
// constant and re-locates principals in the re-sorted sequents.
Proof ground_proof(const Proof& p, const Substitution& s) {
  Sequent concl = s.apply(p.conclusion);
  std::optional<Principal> pr;
  if (p.principal) pr = locate(concl, p.principal->side, s.apply(p.principal_formula()));
  std::optional<Term> w;
  if (p.witness) w = s.apply(*p.witness);
  std::vector<Proof> prem;
  for (const auto& q : p.premises) prem.push_back(ground_proof(q, s));
  return make_proof(p.rule, std::move(concl), pr, std::move(prem), std::move(w), p.eigen);
}

void proof_metas(const Proof& p, const Substitution& s, std::set<int>& out) {
  for (const auto& f : p.conclusion.ante()) collect_metas(s.apply(f), out);
  for (const auto& f : p.conclusion.succ()) collect_metas(s.apply(f), out);
  if (p.witness) collect_metas(s.apply(*p.witness), out);
  for (const auto& q : p.premises) proof_metas(q, s, out);
}

}  // namespace

// ---------------------------------------------------------------- ground search (I, O, restart)

namespace {

enum class GroundMode { Intuitionistic, Uniform, Restart };

class GroundSearch {
 public:
  GroundSearch(GroundMode mode, const SearchLimits& limits, NameSupply& names, Budget& budget,
               std::optional<Formula> restart_goal, int per_formula)
      : mode_(mode),
        limits_(limits),
        names_(names),
        budget_(budget),
        restart_(std::move(restart_goal)),
        per_formula_(per_formula) {}

  bool depth_limited = false;
  bool quantifier_limited = false;

  std::optional<Proof> solve(const Sequent& s, int depth) {
    if (!budget_.tick()) return std::nullopt;
    if (depth > limits_.depth) {
      depth_limited = true;
      return std::nullopt;
    }
    const Formula g = s.succ().front();
    const bool atomic_goal = g.is_atomic() || g.kind() == FormulaKind::Bot;
    if (g.kind() == FormulaKind::Top) return axiom(s);
    if (s.contains(Side::Ante, g) &&
        (atomic_goal || (mode_ == GroundMode::Intuitionistic && limits_.strengthened_axioms)))
      return axiom(s);
    if (s.contains(Side::Ante, Formula::bot()) && (mode_ == GroundMode::Intuitionistic || atomic_goal))
      return node1(R::BotR, s, Side::Succ, g, axiom(Sequent(s.ante(), {Formula::bot()})));

    // Nodes where an invertible rule fires are keyed by the full multiset:
    // such a step may only add a copy of a formula already present.
    Key key{eager(s, g) ? s.ante() : unique(s.ante()), g};
    if (history_.count(key)) return std::nullopt;
    history_.insert(key);
    std::optional<Proof> out = mode_ == GroundMode::Intuitionistic ? intuitionistic(s, g, depth)
                                                                   : goal_directed(s, g, depth);
    history_.erase(key);
    return out;
  }

 private:
  using Key = std::pair<std::vector<Formula>, Formula>;

  static std::vector<Formula> unique(const std::vector<Formula>& v) {
    std::vector<Formula> out;
    for (const auto& f : v)
      if (out.empty() || !(out.back() == f)) out.push_back(f);
    return out;
  }

  bool eager(const Sequent& s, const Formula& g) const {
    const bool intuitionistic = mode_ == GroundMode::Intuitionistic;
    if (intuitionistic && (g.kind() == FormulaKind::Imp || g.kind() == FormulaKind::And ||
                           g.kind() == FormulaKind::Forall))
      return true;
    if (!intuitionistic && !g.is_atomic() && g.kind() != FormulaKind::Bot) return true;
    const bool with_or = mode_ != GroundMode::Restart;
    for (const auto& f : s.ante())
      if (f.kind() == FormulaKind::And || f.kind() == FormulaKind::Exists || (with_or && f.kind() == FormulaKind::Or))
        return true;
    return false;
  }

  std::optional<Proof> intuitionistic(const Sequent& s, const Formula& g, int depth) {
    if (auto p = left_invertible(s, depth, true)) return *p;
    switch (g.kind()) {
      case FormulaKind::Imp:
      case FormulaKind::And:
      case FormulaKind::Forall:
        return right_rule(s, g, depth);
      default:
        break;
    }
    if (g.kind() == FormulaKind::Or || g.kind() == FormulaKind::Exists)
      if (auto p = right_rule(s, g, depth)) return p;
    return left_choices(s, g, depth);
  }

  std::optional<Proof> goal_directed(const Sequent& s, const Formula& g, int depth) {
    if (!g.is_atomic() && g.kind() != FormulaKind::Bot) return right_rule(s, g, depth);
    if (auto p = left_invertible(s, depth, mode_ == GroundMode::Uniform)) return *p;
    if (auto p = left_choices(s, g, depth)) return p;
    if (mode_ == GroundMode::Restart) {
      for (const auto& f : s.ante()) {
        if (f.kind() != FormulaKind::Or) continue;
        const Sequent rest = minus(s, Side::Ante, f);
        auto a = solve(rest.with_added(Side::Ante, f.left()), depth + 1);
        if (!a) continue;
        Sequent right = rest.with_added(Side::Ante, f.right());
        auto b = solve(Sequent(right.ante(), {*restart_}), depth + 1);
        if (b) return node2(R::OrLG, s, Side::Ante, f, std::move(*a), std::move(*b));
      }
      if (!(g == *restart_)) {
        if (auto p = solve(Sequent(s.ante(), {*restart_}), depth + 1))
          return make_proof(R::ResG, s, std::nullopt, {std::move(*p)});
      }
    }
    return std::nullopt;
  }

  // Applies the first invertible left rule. Outer nullopt: none applicable.
  std::optional<std::optional<Proof>> left_invertible(const Sequent& s, int depth, bool with_or) {
    for (const auto& f : s.ante()) {
      if (f.kind() != FormulaKind::And) continue;
      auto p = solve(minus(s, Side::Ante, f).with_added(Side::Ante, {f.left(), f.right()}), depth + 1);
      if (!p) return std::optional<Proof>();
      return std::optional<Proof>(node1(R::AndLStar, s, Side::Ante, f, std::move(*p)));
    }
    for (const auto& f : s.ante()) {
      if (f.kind() != FormulaKind::Exists) continue;
      std::string c = names_.fresh("c");
      auto p = solve(minus(s, Side::Ante, f).with_added(Side::Ante, instantiate(f.body(), Term::constant(c))),
                     depth + 1);
      if (!p) return std::optional<Proof>();
      return std::optional<Proof>(node1(R::ExL, s, Side::Ante, f, std::move(*p), std::nullopt, c));
    }
    if (!with_or) return std::nullopt;
    for (const auto& f : s.ante()) {
      if (f.kind() != FormulaKind::Or) continue;
      const Sequent rest = minus(s, Side::Ante, f);
      auto a = solve(rest.with_added(Side::Ante, f.left()), depth + 1);
      if (!a) return std::optional<Proof>();
      auto b = solve(rest.with_added(Side::Ante, f.right()), depth + 1);
      if (!b) return std::optional<Proof>();
      return std::optional<Proof>(node2(R::OrL, s, Side::Ante, f, std::move(*a), std::move(*b)));
    }
    return std::nullopt;
  }

  std::optional<Proof> right_rule(const Sequent& s, const Formula& g, int depth) {
    const std::vector<Formula>& ante = s.ante();
    switch (g.kind()) {
      case FormulaKind::And: {
        auto a = solve(Sequent(ante, {g.left()}), depth + 1);
        if (!a) return std::nullopt;
        auto b = solve(Sequent(ante, {g.right()}), depth + 1);
        if (!b) return std::nullopt;
        return node2(R::AndR, s, Side::Succ, g, std::move(*a), std::move(*b));
      }
      case FormulaKind::Imp: {
        Sequent prem = Sequent(ante, {g.right()}).with_added(Side::Ante, g.left());
        auto p = solve(prem, depth + 1);
        if (!p) return std::nullopt;
        return node1(R::ImpR, s, Side::Succ, g, std::move(*p));
      }
      case FormulaKind::Forall: {
        std::string c = names_.fresh("c");
        auto p = solve(Sequent(ante, {instantiate(g.body(), Term::constant(c))}), depth + 1);
        if (!p) return std::nullopt;
        return node1(R::AllR, s, Side::Succ, g, std::move(*p), std::nullopt, c);
      }
      case FormulaKind::Or: {
        if (auto p = solve(Sequent(ante, {g.left()}), depth + 1))
          return node1(R::OrR1, s, Side::Succ, g, std::move(*p));
        if (auto p = solve(Sequent(ante, {g.right()}), depth + 1))
          return node1(R::OrR2, s, Side::Succ, g, std::move(*p));
        return std::nullopt;
      }
      case FormulaKind::Exists: {
        for (const auto& t : witnesses(s)) {
          if (auto p = solve(Sequent(ante, {instantiate(g.body(), t)}), depth + 1))
            return node1(R::ExR, s, Side::Succ, g, std::move(*p), t);
          if (budget_.exhausted) break;
        }
        return std::nullopt;
      }
      default:
        return std::nullopt;
    }
  }

  std::optional<Proof> left_choices(const Sequent& s, const Formula& g, int depth) {
    for (const auto& f : s.ante()) {
      if (f.kind() != FormulaKind::Imp || s.contains(Side::Ante, f.right())) continue;
      auto a = solve(Sequent(s.ante(), {f.left()}), depth + 1);
      if (!a) continue;
      auto b = solve(minus(s, Side::Ante, f).with_added(Side::Ante, f.right()), depth + 1);
      if (b) return node2(R::ImpLStarI, s, Side::Ante, f, std::move(*a), std::move(*b));
      if (budget_.exhausted) return std::nullopt;
    }
    std::vector<Term> ws;
    bool have_ws = false;
    for (const auto& f : s.ante()) {
      if (f.kind() != FormulaKind::Forall) continue;
      int& used = uses_[f];
      if (used >= per_formula_) {
        quantifier_limited = true;
        continue;
      }
      if (!have_ws) {
        ws = witnesses(s);
        have_ws = true;
      }
      for (const auto& t : ws) {
        const Formula inst = instantiate(f.body(), t);
        if (s.contains(Side::Ante, inst)) continue;
        ++used;
        auto p = solve(s.with_added(Side::Ante, inst), depth + 1);
        --used;
        if (p) return node1(R::AllLStar, s, Side::Ante, f, std::move(*p), t);
        if (budget_.exhausted) return std::nullopt;
      }
    }
    (void)g;
    return std::nullopt;
  }

  std::vector<Term> witnesses(const Sequent& s) {
    std::set<Term> terms;
    for (const auto& f : s.ante()) ground_subterms(f, terms);
    for (const auto& f : s.succ()) ground_subterms(f, terms);
    if (restart_) ground_subterms(*restart_, terms);
    if (terms.empty()) {
      if (!fallback_) fallback_ = Term::constant(names_.fresh("w"));
      terms.insert(*fallback_);
    }
    return {terms.begin(), terms.end()};
  }

  GroundMode mode_;
  const SearchLimits& limits_;
  NameSupply& names_;
  Budget& budget_;
  std::optional<Formula> restart_;
  int per_formula_;
  std::set<Key> history_;
  std::map<Formula, int> uses_;
  std::optional<Term> fallback_;
};

bool has_quantifier(const std::vector<Formula>& v) {
  for (const auto& f : v)
    if (f.has_quantifier()) return true;
  return false;
}

SearchOutcome run_ground(const Sequent& s, GroundMode mode, std::optional<Formula> restart,
                         const SearchLimits& limits, const SearchOptions& options) {
  SearchOutcome out;
  out.input = s;
  switch (mode) {
    case GroundMode::Intuitionistic: out.cls = ProofClass::of(ClassKind::I); break;
    case GroundMode::Uniform: out.cls = ProofClass::of(ClassKind::O); break;
    case GroundMode::Restart: out.cls = ProofClass::restart(ClassKind::OG, *restart); break;
  }
  const bool quantified = has_quantifier(s.ante()) || has_quantifier(s.succ());
  Budget budget{limits.node_budget};
  std::set<std::string> reserved = s.symbols();
  if (restart) {
    auto r = free_symbols(*restart);
    reserved.insert(r.begin(), r.end());
  }
  NameSupply names(reserved);
  const int rounds = quantified ? limits.qbudget : 1;
  for (int k = 1; k <= rounds; ++k) {
    GroundSearch engine(mode, limits, names, budget, restart, k);
    std::optional<Proof> p = engine.solve(s, 0);
    out.nodes = budget.nodes;
    if (p) {
      Proof proof = mode == GroundMode::Intuitionistic ? expand_identities(*p, ClassKind::Istar) : *p;
      if (options.keep_starred) {
        CheckReport rep = check_proof(proof, mode == GroundMode::Restart ? out.cls : ProofClass::of(ClassKind::Istar));
        if (mode != GroundMode::Restart && !rep.ok())
          throw std::logic_error("search produced an invalid proof: " + rep.reason);
        if (mode != GroundMode::Restart) out.cls = ProofClass::of(ClassKind::Istar);
        out.proof = std::move(proof);
      } else {
        out.proof = expand_starred(proof, out.cls);
      }
      out.verdict = Verdict::Proved;
      return out;
    }
    if (budget.exhausted) break;
    if (!engine.depth_limited && !engine.quantifier_limited) {
      if (!quantified && mode != GroundMode::Restart) out.verdict = Verdict::Refuted;
      break;
    }
  }
  return out;
}

}  // namespace

SearchOutcome prove(const Sequent& s, SearchMode mode, const SearchLimits& limits,
                    const SearchOptions& options) {
  validate(limits);
  if (mode != SearchMode::Classical) {
    if (s.succ().size() != 1)
      throw std::invalid_argument("intuitionistic and uniform search need exactly one succedent formula");
    if (s.has_meta()) throw std::invalid_argument("input contains metavariables");
    return run_ground(s, mode == SearchMode::Intuitionistic ? GroundMode::Intuitionistic : GroundMode::Uniform,
                      std::nullopt, limits, options);
  }
  SearchOutcome out;
  out.input = s;
  out.cls = ProofClass::of(ClassKind::C);
  Sequent target = s;
  if (options.herbrandize) {
    target = herbrandize(s);
    out.herbrand = target;
  }
  const bool quantified = target.has_quantifier();
  Budget budget{limits.node_budget};
  NameSupply names(target.symbols());
  const int max_rounds = quantified ? limits.qbudget : 0;
  for (int k = 0; k <= max_rounds; ++k) {
    ClassicalSearch engine(limits, names, budget);
    std::optional<Proof> found;
    Substitution final_subst;
    engine.solve(target, 0, k, ClassicalState{}, [&](const ClassicalState& st, Proof p) {
      found = std::move(p);
      final_subst = st.subst;
      return true;
    });
    out.nodes = budget.nodes;
    if (found) {
      std::set<int> leftover;
      proof_metas(*found, final_subst, leftover);
      if (!leftover.empty()) {
        Term d = Term::constant(names.fresh("d"));
        for (int m : leftover) final_subst.bind(m, d);
      }
      Proof starred = expand_identities(ground_proof(*found, final_subst), ClassKind::Cstar);
      if (options.keep_starred) {
        CheckReport rep = check_proof(starred, ProofClass::of(ClassKind::Cstar));
        if (!rep.ok()) throw std::logic_error("search produced an invalid proof: " + rep.reason);
        out.cls = ProofClass::of(ClassKind::Cstar);
        out.proof = std::move(starred);
      } else {
        out.proof = expand_starred(starred, out.cls);
      }
      out.verdict = Verdict::Proved;
      return out;
    }
    if (budget.exhausted) break;
    if (!engine.depth_limited && !engine.rounds_limited) {
      if (!quantified) out.verdict = Verdict::Refuted;
      break;
    }
  }
  return out;
}

SearchOutcome prove_restart(const std::vector<Formula>& gamma, const Formula& goal,
                            const SearchLimits& limits, const SearchOptions& options) {
  validate(limits);
  return run_ground(Sequent(gamma, {goal}), GroundMode::Restart, goal, limits, options);
}

}  // namespace seqcalc
