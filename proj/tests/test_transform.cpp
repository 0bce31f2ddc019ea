#include <gtest/gtest.h>

#include "seqcalc/parser.hpp"
#include "seqcalc/search.hpp"
#include "seqcalc/transform.hpp"

using namespace seqcalc;
using R = RuleId;

namespace {

Formula F(const char* s) { return parse_formula(s); }
Sequent S(const char* s) { return parse_sequent(s); }

Proof classical(const char* s, bool starred = false) {
  SearchOptions o;
  o.keep_starred = starred;
  SearchOutcome out = prove(S(s), SearchMode::Classical, {}, o);
  EXPECT_TRUE(out.proved()) << s;
  return *out.proof;
}

Proof intuitionistic(const char* s) {
  SearchOptions o;
  o.keep_starred = true;
  SearchOutcome out = prove(S(s), SearchMode::Intuitionistic, {}, o);
  EXPECT_TRUE(out.proved()) << s;
  return *out.proof;
}

bool valid(const Proof& p, ClassKind k) {
  CheckReport r = check_proof(p, ProofClass::of(k));
  if (!r.ok()) ADD_FAILURE() << class_name(k) << ": " << r.reason << "\n" << to_tree_string(p);
  return r.ok();
}

bool uses(const Proof& p, R r) { return rule_usage(p).count(r) > 0; }

const char* kSequents[] = {
    "|- ((q => s) => q) => q",
    "forall x. (p(x) | q) |- (forall x. p(x)) | q",
    "forall x. forall y. (r(x,a) | r(y,b)) |- exists y. forall x. r(x,y)",
    "|- exists x. (p(x) => p(f(x)))",
    "(p => q) => p |- p",
    "p & q, r | s |- (p & r) | (q & s) | s",
    "exists x. (p(x) & q) |- exists x. p(x)",
};

}  // namespace

TEST(Weaken, AddsFormulasAndKeepsHeight) {
  for (const char* s : kSequents) {
    Proof p = classical(s);
    Proof w = weaken(p, {F("t"), F("forall x. p(x)")}, {F("u")});
    EXPECT_EQ(w.conclusion, p.conclusion.with_added(Side::Ante, {F("t"), F("forall x. p(x)")})
                                .with_added(Side::Succ, F("u")));
    EXPECT_LE(w.height, p.height);
    valid(w, ClassKind::C);
  }
}

TEST(Weaken, RenamesClashingEigenvariables) {
  Proof p = classical("forall x. p(x) |- forall y. p(y)");
  const Proof* n = &p;
  while (n->rule != R::AllR) n = &n->premises[0];
  ASSERT_TRUE(n->eigen);
  Formula clash = Formula::atom("q", {Term::constant(*n->eigen)});
  Proof w = weaken(p, {clash}, {});
  EXPECT_TRUE(valid(w, ClassKind::C));
  EXPECT_EQ(w.height, p.height);
}

TEST(Weaken, RejectsInvalidInput) {
  Proof p = classical("p |- p");
  p.conclusion = S("p |- q");
  EXPECT_THROW(weaken(p, {}, {}), TransformError);
}

TEST(Weaken, IntuitionisticProofStaysIntuitionistic) {
  Proof p = intuitionistic("p => q, p |- q");
  Proof w = weaken(p, {F("r")}, {});
  EXPECT_TRUE(valid(w, ClassKind::Istar));
}

TEST(Contraction, EliminationRoundTrip) {
  for (const char* s : kSequents) {
    Proof c = classical(s);
    Proof plus = to_starred_with_contractions(c);
    ASSERT_TRUE(valid(plus, ClassKind::Cplus)) << s;
    Proof star = eliminate_contractions(plus);
    EXPECT_EQ(star.conclusion, c.conclusion);
    EXPECT_FALSE(uses(star, R::ContrL) || uses(star, R::ContrR));
    EXPECT_TRUE(valid(star, ClassKind::Cstar)) << s;
    EXPECT_TRUE(valid(expand_starred(star), ClassKind::C)) << s;
  }
}

TEST(Contraction, RejectsNonStarredInput) {
  Proof c = classical("p |- p");
  EXPECT_NO_THROW(eliminate_contractions(c));
  Proof bad = classical("p & q |- q");
  bad.premises.clear();
  EXPECT_THROW(eliminate_contractions(bad), TransformError);
}

TEST(ExpandStarred, ClassicalAndIntuitionistic) {
  for (const char* s : kSequents) {
    Proof star = classical(s, true);
    EXPECT_TRUE(valid(star, ClassKind::Cstar));
    Proof c = expand_starred(star);
    EXPECT_EQ(c.conclusion, star.conclusion);
    EXPECT_TRUE(valid(c, ClassKind::C));
  }
  for (const char* s : {"p => q, q => r, p |- r", "forall x. (p(x) => q(x)), p(a) |- q(a)",
                        "(p & q) & r |- q", "q | s |- s | q"}) {
    Proof star = intuitionistic(s);
    Proof i = expand_starred(star);
    EXPECT_TRUE(valid(i, ClassKind::I)) << s;
  }
}

TEST(ExpandStarred, NoStarredNodesMeansUnchanged) {
  Proof p = classical("p | q |- q | p");
  EXPECT_EQ(expand_starred(p).height, p.height);
  EXPECT_EQ(proof_size(expand_starred(p)), proof_size(p));
}

TEST(ExpandStarred, AllLStarBecomesContractionAndAllL) {
  Proof star = intuitionistic("forall x. p(x) |- p(a)");
  ASSERT_EQ(star.rule, R::AllLStar);
  Proof i = expand_starred(star);
  EXPECT_EQ(i.rule, R::ContrL);
  EXPECT_EQ(i.premises[0].rule, R::AllL);
}

TEST(Extract, NoImpRNoOrL) {
  for (const char* s : {"forall x. p(x) |- p(a) & p(b)", "p => q, p |- q, r",
                        "forall x. (p(x) => q(x)), p(a) |- exists y. q(y)"}) {
    Proof c = classical(s);
    ASSERT_FALSE(uses(c, R::ImpR) || uses(c, R::OrL));
    Proof i = extract_intuitionistic(c);
    EXPECT_TRUE(valid(i, ClassKind::I)) << s;
    EXPECT_EQ(i.conclusion.ante(), c.conclusion.ante());
    EXPECT_TRUE(c.conclusion.contains(Side::Succ, i.conclusion.succ().front()));
  }
}

TEST(Extract, NoImpLNoOrRNoExR) {
  for (const char* s : {"p | q, forall x. r(x) |- forall y. (r(y) & (s => r(y)))",
                        "exists x. (p(x) & q) |- q"}) {
    Proof c = classical(s);
    ASSERT_FALSE(uses(c, R::ImpL) || uses(c, R::OrR1) || uses(c, R::OrR2) || uses(c, R::ExR));
    Proof i = extract_intuitionistic(c);
    EXPECT_TRUE(valid(i, ClassKind::I)) << s;
    EXPECT_EQ(i.conclusion, c.conclusion);
  }
}

TEST(Extract, RejectsIneligibleProofs) {
  EXPECT_THROW(extract_intuitionistic(classical("|- ((q => s) => q) => q")), TransformError);
}

TEST(Augment, AddsNegatedGoal) {
  EXPECT_EQ(augment(S("p |- q")), S("q => bot, p |- q"));
  EXPECT_THROW(augment(S("p |- q, r")), TransformError);
}

TEST(RenameConstant, RewritesEverywhere) {
  Proof p = classical("forall x. p(x) |- p(a)");
  Proof q = rename_constant(p, "a", "b");
  EXPECT_EQ(q.conclusion, S("forall x. p(x) |- p(b)"));
  EXPECT_TRUE(valid(q, ClassKind::C));
  EXPECT_TRUE(proof_symbols(q).count("b"));
  EXPECT_FALSE(proof_symbols(q).count("a"));
}
