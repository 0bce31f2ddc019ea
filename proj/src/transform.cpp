#include "seqcalc/transform.hpp"

#include <algorithm>

namespace seqcalc {

namespace {

using R = RuleId;

Sequent rename_in(const Sequent& s, const std::string& from, const Term& to) {
  std::vector<Formula> a, b;
  for (const auto& f : s.ante()) a.push_back(replace_constant(f, from, to));
  for (const auto& f : s.succ()) b.push_back(replace_constant(f, from, to));
  return Sequent(std::move(a), std::move(b));
}

void gather_symbols(const Proof& p, std::set<std::string>& out) {
  auto s = p.conclusion.symbols();
  out.insert(s.begin(), s.end());
  if (p.eigen) out.insert(*p.eigen);
  if (p.witness) {
    auto w = free_symbols(*p.witness);
    out.insert(w.begin(), w.end());
  }
  for (const auto& q : p.premises) gather_symbols(q, out);
}

std::set<std::string> symbols_of(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::set<std::string> out;
  for (const auto* v : {&a, &b})
    for (const auto& f : *v) {
      auto s = free_symbols(f);
      out.insert(s.begin(), s.end());
    }
  return out;
}

Proof rebuild(const Proof& p, Sequent conclusion, std::vector<Proof> premises) {
  std::optional<Principal> pr;
  if (p.principal) pr = locate(conclusion, p.principal->side, p.principal_formula());
  return make_proof(p.rule, std::move(conclusion), pr, std::move(premises), p.witness, p.eigen);
}

Proof with_premises(const Proof& p, std::vector<Proof> premises) {
  return make_proof(p.rule, p.conclusion, p.principal, std::move(premises), p.witness, p.eigen);
}

bool valid_somewhere(const Proof& p, std::initializer_list<ClassKind> classes) {
  for (ClassKind k : classes)
    if (check_proof(p, ProofClass::of(k), true).ok()) return true;
  return false;
}

// ---------------------------------------------------------------- weakening

Proof weaken_impl(const Proof& p, const std::vector<Formula>& ea, const std::vector<Formula>& es,
                  NameSupply& names) {
  if (ea.empty() && es.empty()) return p;
  Sequent concl = p.conclusion.with_added(Side::Ante, ea).with_added(Side::Succ, es);
  std::vector<Proof> prem = p.premises;
  std::optional<std::string> eigen = p.eigen;
  if (eigen && symbols_of(ea, es).count(*eigen)) {
    std::string fresh = names.fresh("c");
    prem[0] = rename_constant(prem[0], *eigen, fresh);
    eigen = fresh;
  }
  static const std::vector<Formula> none;
  std::vector<Proof> out;
  for (std::size_t i = 0; i < prem.size(); ++i) {
    bool succ_too = true;
    switch (p.rule) {
      case R::ImpL: succ_too = i == 0; break;
      case R::ImpLStarI: succ_too = i == 1; break;
      case R::OrLG: succ_too = i == 0; break;
      case R::ResG:
      case R::MOrL:
      case R::MImpR:
      case R::MAllR: succ_too = false; break;
      default: break;
    }
    out.push_back(weaken_impl(prem[i], ea, succ_too ? es : none, names));
  }
  std::optional<Principal> pr;
  if (p.principal) pr = locate(concl, p.principal->side, p.principal_formula());
  return make_proof(p.rule, std::move(concl), pr, std::move(out), p.witness, eigen);
}

// ---------------------------------------------------------------- inversion / superset

struct Components {
  std::vector<Formula> ante;
  std::vector<Formula> succ;
};

Components components(const Formula& f, Side side, std::size_t which, const std::string& c) {
  Components out;
  switch (f.kind()) {
    case FormulaKind::And:
      if (side == Side::Ante) out.ante = {f.left(), f.right()};
      else out.succ = {which == 0 ? f.left() : f.right()};
      break;
    case FormulaKind::Or:
      if (side == Side::Ante) out.ante = {which == 0 ? f.left() : f.right()};
      else out.succ = {f.left(), f.right()};
      break;
    case FormulaKind::Imp:
      if (side == Side::Ante) {
        if (which == 0) out.succ = {f.left()};
        else out.ante = {f.right()};
      } else {
        out.ante = {f.left()};
        out.succ = {f.right()};
      }
      break;
    case FormulaKind::Exists:
      if (side == Side::Ante) out.ante = {instantiate(f.body(), Term::constant(c))};
      break;
    case FormulaKind::Forall:
      if (side == Side::Succ) out.succ = {instantiate(f.body(), Term::constant(c))};
      break;
    default:
      break;
  }
  return out;
}

std::optional<RuleId> invertible_rule(const Formula& f, Side side) {
  switch (f.kind()) {
    case FormulaKind::And: return side == Side::Ante ? R::AndLStar : R::AndR;
    case FormulaKind::Or: return side == Side::Ante ? R::OrL : R::OrRStar;
    case FormulaKind::Imp: return side == Side::Ante ? R::ImpLStar : R::ImpR;
    case FormulaKind::Exists:
      if (side == Side::Ante) return R::ExL;
      return std::nullopt;
    case FormulaKind::Forall:
      if (side == Side::Succ) return R::AllR;
      return std::nullopt;
    default: return std::nullopt;
  }
}

class Restrictor {
 public:
  explicit Restrictor(NameSupply& names) : names_(names) {}

  // p proves S; returns a proof of S with one copy of f removed from `side`
  // and its components (branch `which`, eigenvariable c) added.
  Proof invert(const Proof& p, Side side, const Formula& f, std::size_t which, const std::string& c) {
    Components comp = components(f, side, which, c);
    Sequent target;
    if (!p.conclusion.remove_one(side, f, target))
      throw std::logic_error("inversion target missing: " + to_string(f));
    target = target.with_added(Side::Ante, comp.ante).with_added(Side::Succ, comp.succ);

    if (p.principal && p.principal->side == side && p.principal_formula() == f &&
        invertible_rule(f, side) == p.rule) {
      if (p.rule == R::ExL || p.rule == R::AllR) {
        if (*p.eigen == c) return p.premises[0];
        return rename_constant(p.premises[0], *p.eigen, c);
      }
      return p.premises[p.premises.size() == 1 ? 0 : which];
    }
    if (p.rule == R::Axiom) return axiom_for(target);
    if (p.rule == R::BotR && side == Side::Succ && p.principal_formula() == f)
      return superset(p.premises[0], target);
    std::vector<Proof> prem;
    for (const auto& q : p.premises) prem.push_back(invert(q, side, f, which, c));
    return rebuild(p, target, std::move(prem));
  }

  // p proves S whose formula sets are included in those of t (bot excepted on
  // the right); returns a proof of t.
  Proof superset(const Proof& p, const Sequent& t) {
    switch (p.rule) {
      case R::Axiom:
        return axiom_for(t);
      case R::BotR:
      case R::ContrL:
      case R::ContrR:
        return superset(p.premises[0], t);
      default:
        break;
    }
    const Side side = p.principal->side;
    const Formula f = p.principal_formula();
    std::optional<std::string> eigen = p.eigen;
    std::vector<Proof> prem = p.premises;
    if (eigen && t.symbols().count(*eigen)) {
      std::string fresh = names_.fresh("c");
      prem[0] = rename_constant(prem[0], *eigen, fresh);
      eigen = fresh;
    }
    const bool keeps_principal = p.rule == R::AllLStar || p.rule == R::ExRStar;
    Sequent t_rest;
    if (!t.remove_one(side, f, t_rest))
      throw std::logic_error("superset target lacks principal " + to_string(f));
    std::vector<Proof> out;
    for (std::size_t i = 0; i < prem.size(); ++i) {
      Sequent target;
      if (keeps_principal) {
        const Formula inst = instantiate(f.body(), *p.witness);
        target = t.with_added(side, inst);
      } else {
        Components comp = components(f, side, i, eigen ? *eigen : std::string());
        target = t_rest.with_added(Side::Ante, comp.ante).with_added(Side::Succ, comp.succ);
      }
      Proof q = prem[i];
      if (!keeps_principal)
        while (q.conclusion.contains(side, f) && !t_rest.contains(side, f))
          q = invert(q, side, f, i, eigen ? *eigen : names_.fresh("c"));
      out.push_back(superset(q, target));
    }
    return make_proof(p.rule, t, locate(t, side, f), std::move(out), p.witness, eigen);
  }

 private:
  Proof axiom_for(const Sequent& t) {
    if (is_axiom(t, false)) return make_proof(R::Axiom, t, std::nullopt);
    if (t.contains(Side::Ante, Formula::bot()) && !t.succ().empty()) {
      const Formula d = t.succ().front();
      Sequent prem = t.without(Side::Succ, 0).with_added(Side::Succ, Formula::bot());
      return make_proof(R::BotR, t, Principal{Side::Succ, 0},
                        {make_proof(R::Axiom, prem, std::nullopt)});
    }
    if (is_axiom(t, true)) return make_proof(R::Axiom, t, std::nullopt);
    throw std::logic_error("expected an axiom: " + to_string(t));
  }

  NameSupply& names_;
};

Proof eliminate_impl(const Proof& p, Restrictor& r) {
  std::vector<Proof> prem;
  for (const auto& q : p.premises) prem.push_back(eliminate_impl(q, r));
  if (p.rule == R::ContrL || p.rule == R::ContrR) return r.superset(prem[0], p.conclusion);
  return with_premises(p, std::move(prem));
}

// ---------------------------------------------------------------- starred expansion

Proof expand_impl(const Proof& p, NameSupply& names) {
  std::vector<Proof> prem;
  for (const auto& q : p.premises) prem.push_back(expand_impl(q, names));
  const Sequent& s = p.conclusion;
  switch (p.rule) {
    case R::AndLStar: {
      const Formula f = p.principal_formula();
      Sequent s1 = s.with_added(Side::Ante, f);
      Sequent s2 = s.with_added(Side::Ante, f.left());
      Proof n2 = make_proof(R::AndL2, s2, locate(s2, Side::Ante, f), {prem[0]});
      Proof n1 = make_proof(R::AndL1, s1, locate(s1, Side::Ante, f), {n2});
      return make_proof(R::ContrL, s, p.principal, {n1});
    }
    case R::AllLStar: {
      const Formula f = p.principal_formula();
      Sequent s1 = s.with_added(Side::Ante, f);
      Proof n1 = make_proof(R::AllL, s1, locate(s1, Side::Ante, f), {prem[0]}, p.witness);
      return make_proof(R::ContrL, s, p.principal, {n1});
    }
    case R::OrRStar: {
      const Formula f = p.principal_formula();
      Sequent s1 = s.with_added(Side::Succ, f);
      Sequent s2 = s.with_added(Side::Succ, f.left());
      Proof n2 = make_proof(R::OrR2, s2, locate(s2, Side::Succ, f), {prem[0]});
      Proof n1 = make_proof(R::OrR1, s1, locate(s1, Side::Succ, f), {n2});
      return make_proof(R::ContrR, s, p.principal, {n1});
    }
    case R::ExRStar: {
      const Formula f = p.principal_formula();
      Sequent s1 = s.with_added(Side::Succ, f);
      Proof n1 = make_proof(R::ExR, s1, locate(s1, Side::Succ, f), {prem[0]}, p.witness);
      return make_proof(R::ContrR, s, p.principal, {n1});
    }
    case R::ImpLStar: {
      const Formula f = p.principal_formula();
      const Sequent rest = s.without(Side::Ante, p.principal->index);
      Sequent big = s.with_added(Side::Succ, rest.succ());
      Proof node = make_proof(R::ImpL, big, locate(big, Side::Ante, f), {prem[0], prem[1]});
      Sequent cur = big;
      for (const auto& g : rest.succ()) {
        Sequent next;
        cur.remove_one(Side::Succ, g, next);
        node = make_proof(R::ContrR, next, locate(next, Side::Succ, g), {node});
        cur = next;
      }
      return node;
    }
    case R::ImpLStarI: {
      const Formula f = p.principal_formula();
      Sequent s1 = s.with_added(Side::Ante, f);
      Proof right = weaken_impl(prem[1], {f}, {}, names);
      Proof n1 = make_proof(R::ImpL, s1, locate(s1, Side::Ante, f), {prem[0], right});
      return make_proof(R::ContrL, s, p.principal, {n1});
    }
    default:
      return with_premises(p, std::move(prem));
  }
}

// ---------------------------------------------------------------- plain to starred

Proof starred_impl(const Proof& p, NameSupply& names) {
  std::vector<Proof> prem;
  for (const auto& q : p.premises) prem.push_back(starred_impl(q, names));
  const Sequent& s = p.conclusion;
  switch (p.rule) {
    case R::AndL1:
    case R::AndL2: {
      const Formula f = p.principal_formula();
      Formula other = p.rule == R::AndL1 ? f.right() : f.left();
      return make_proof(R::AndLStar, s, p.principal, {weaken_impl(prem[0], {other}, {}, names)});
    }
    case R::AllL: {
      const Formula f = p.principal_formula();
      return make_proof(R::AllLStar, s, p.principal, {weaken_impl(prem[0], {f}, {}, names)},
                        p.witness);
    }
    case R::OrR1:
    case R::OrR2: {
      const Formula f = p.principal_formula();
      Formula other = p.rule == R::OrR1 ? f.right() : f.left();
      return make_proof(R::OrRStar, s, p.principal, {weaken_impl(prem[0], {}, {other}, names)});
    }
    case R::ExR: {
      const Formula f = p.principal_formula();
      return make_proof(R::ExRStar, s, p.principal, {weaken_impl(prem[0], {}, {f}, names)},
                        p.witness);
    }
    case R::ImpL: {
      const Formula f = p.principal_formula();
      std::vector<Formula> delta1 = p.premises[0].conclusion.succ();
      multiset_remove(delta1, f.left());
      const std::vector<Formula>& delta2 = p.premises[1].conclusion.succ();
      Proof left = weaken_impl(prem[0], {}, delta2, names);
      Proof right = weaken_impl(prem[1], {}, delta1, names);
      return make_proof(R::ImpLStar, s, p.principal, {left, right});
    }
    default:
      return with_premises(p, std::move(prem));
  }
}

// ---------------------------------------------------------------- classical to intuitionistic

struct Extracted {
  Proof proof;
  Formula goal;
};

class Extractor {
 public:
  explicit Extractor(NameSupply& names) : names_(names) {}

  Extracted run(const Proof& p) {
    const Sequent& s = p.conclusion;
    switch (p.rule) {
      case R::Axiom: {
        if (s.contains(Side::Succ, Formula::top())) return leaf(s, Formula::top());
        for (const auto& a : s.ante())
          if ((a.is_atomic() || a.kind() == FormulaKind::Bot) && s.contains(Side::Succ, a))
            return leaf(s, a);
        for (const auto& a : s.ante())
          if (s.contains(Side::Succ, a)) return leaf(s, a);
        throw TransformError("axiom node is not an axiom");
      }
      case R::ContrL: {
        Extracted e = run(p.premises[0]);
        Sequent c(s.ante(), {e.goal});
        return {make_proof(R::ContrL, c, locate(c, Side::Ante, p.principal_formula()), {e.proof}),
                e.goal};
      }
      case R::ContrR:
        return run(p.premises[0]);
      case R::BotR: {
        Extracted e = run(p.premises[0]);
        const Formula d = p.principal_formula();
        Sequent rest = s.without(Side::Succ, p.principal->index);
        if (e.goal.kind() != FormulaKind::Bot || rest.contains(Side::Succ, e.goal)) return e;
        Sequent c(s.ante(), {d});
        return {make_proof(R::BotR, c, Principal{Side::Succ, 0}, {e.proof}), d};
      }
      case R::AndL1:
      case R::AndL2:
      case R::AllL:
      case R::ExL: {
        Extracted e = run(p.premises[0]);
        Sequent c(s.ante(), {e.goal});
        return {make_proof(p.rule, c, locate(c, Side::Ante, p.principal_formula()), {e.proof},
                           p.witness, p.eigen),
                e.goal};
      }
      case R::OrR1:
      case R::OrR2:
      case R::ExR:
      case R::AllR: {
        Extracted e = run(p.premises[0]);
        Sequent rest = s.without(Side::Succ, p.principal->index);
        if (rest.contains(Side::Succ, e.goal)) return e;
        const Formula f = p.principal_formula();
        Sequent c(s.ante(), {f});
        return {make_proof(p.rule, c, Principal{Side::Succ, 0}, {e.proof}, p.witness, p.eigen), f};
      }
      case R::AndR: {
        Sequent rest = s.without(Side::Succ, p.principal->index);
        Extracted l = run(p.premises[0]);
        if (rest.contains(Side::Succ, l.goal)) return l;
        Extracted r = run(p.premises[1]);
        if (rest.contains(Side::Succ, r.goal)) return r;
        const Formula f = p.principal_formula();
        Sequent c(s.ante(), {f});
        return {make_proof(R::AndR, c, Principal{Side::Succ, 0}, {l.proof, r.proof}), f};
      }
      case R::ImpL: {
        const Formula f = p.principal_formula();
        std::vector<Formula> delta1 = p.premises[0].conclusion.succ();
        multiset_remove(delta1, f.left());
        Extracted l = run(p.premises[0]);
        if (std::binary_search(delta1.begin(), delta1.end(), l.goal)) {
          Proof w = weaken_impl(l.proof, {f}, {}, names_);
          return {w, l.goal};
        }
        Extracted r = run(p.premises[1]);
        Sequent c(s.ante(), {r.goal});
        return {make_proof(R::ImpL, c, locate(c, Side::Ante, f), {l.proof, r.proof}), r.goal};
      }
      default:
        throw TransformError("extraction does not handle rule " + std::string(rule_name(p.rule)));
    }
  }

 private:
  static Extracted leaf(const Sequent& s, const Formula& g) {
    return {make_proof(R::Axiom, Sequent(s.ante(), {g}), std::nullopt), g};
  }

  NameSupply& names_;
};

}  // namespace

Proof rename_constant(const Proof& p, const std::string& from, const std::string& to) {
  const Term t = Term::constant(to);
  Proof out;
  out.rule = p.rule;
  out.conclusion = rename_in(p.conclusion, from, t);
  out.principal = p.principal;
  if (p.principal) out.principal = locate(out.conclusion, p.principal->side,
                                          replace_constant(p.principal_formula(), from, t));
  if (p.witness) out.witness = replace_constant(*p.witness, from, t);
  out.eigen = p.eigen && *p.eigen == from ? std::optional<std::string>(to) : p.eigen;
  for (const auto& q : p.premises) out.premises.push_back(rename_constant(q, from, to));
  out.height = p.height;
  return out;
}

std::set<std::string> proof_symbols(const Proof& p) {
  std::set<std::string> out;
  gather_symbols(p, out);
  return out;
}

Proof weaken(const Proof& p, const std::vector<Formula>& extra_ante,
             const std::vector<Formula>& extra_succ) {
  if (!valid_somewhere(p, {ClassKind::C, ClassKind::Cplus, ClassKind::Istar}))
    throw TransformError("weaken: input is not a valid proof");
  NameSupply names(proof_symbols(p));
  names.reserve(symbols_of(extra_ante, extra_succ));
  return weaken_impl(p, extra_ante, extra_succ, names);
}

Proof eliminate_contractions(const Proof& p) {
  CheckReport rep = check_proof(p, ProofClass::of(ClassKind::Cplus));
  if (!rep.ok()) throw TransformError("eliminate_contractions: input is not a Cplus proof: " + rep.reason);
  NameSupply names(proof_symbols(p));
  Restrictor r(names);
  return eliminate_impl(p, r);
}

Proof expand_starred(const Proof& p) {
  if (!valid_somewhere(p, {ClassKind::Cplus, ClassKind::Istar, ClassKind::C}))
    throw TransformError("expand_starred: input is not a valid proof");
  NameSupply names(proof_symbols(p));
  return expand_impl(p, names);
}

Proof expand_starred(const Proof& p, const ProofClass& target) {
  NameSupply names(proof_symbols(p));
  Proof out = expand_impl(p, names);
  CheckReport rep = check_proof(out, target);
  if (!rep.ok()) throw TransformError("expand_starred: result is not a " +
                                      std::string(class_name(target.kind)) + " proof: " + rep.reason);
  return out;
}

Proof to_starred_with_contractions(const Proof& p) {
  CheckReport rep = check_proof(p, ProofClass::of(ClassKind::C));
  if (!rep.ok()) throw TransformError("input is not a C proof: " + rep.reason);
  NameSupply names(proof_symbols(p));
  return starred_impl(p, names);
}

Proof extract_intuitionistic(const Proof& p) {
  CheckReport rep = check_proof(p, ProofClass::of(ClassKind::C));
  if (!rep.ok()) throw TransformError("extract_intuitionistic: input is not a C proof: " + rep.reason);
  RuleUsageProfile prof = rule_usage(p);
  auto used = [&](R r) { return prof.count(r) > 0; };
  NameSupply names(proof_symbols(p));
  if (!used(R::ImpR) && !used(R::OrL)) {
    Extractor ex(names);
    return ex.run(p).proof;
  }
  if (!used(R::ImpL) && !used(R::OrR1) && !used(R::OrR2) && !used(R::ExR)) {
    if (p.conclusion.succ().size() != 1)
      throw TransformError("extract_intuitionistic: this rule profile needs a single succedent formula");
    Proof plus = starred_impl(p, names);
    Restrictor r(names);
    Proof star = eliminate_impl(plus, r);
    return expand_impl(star, names);
  }
  std::string bad;
  for (R r : {R::ImpR, R::OrL, R::ImpL, R::OrR1, R::OrR2, R::ExR})
    if (used(r)) bad += (bad.empty() ? "" : ", ") + std::string(rule_name(r));
  throw TransformError("extract_intuitionistic: proof uses " + bad);
}

Sequent augment(const Sequent& s) {
  if (s.succ().size() != 1) throw TransformError("augment: succedent must hold exactly one formula");
  return s.with_added(Side::Ante, Formula::imp(s.succ().front(), Formula::bot()));
}

}  // namespace seqcalc
