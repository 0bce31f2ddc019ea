// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "seqcalc/calculus.hpp"
#include "seqcalc/corpus.hpp"
#include "seqcalc/fragments.hpp"
#include "seqcalc/parser.hpp"
#include "seqcalc/search.hpp"
#include "seqcalc/transform.hpp"

using namespace seqcalc;

namespace {

// Pinned tolerances and sample sizes.
constexpr double kCorpusSeconds = 60.0;
constexpr double kOracleSeconds = 30.0;
constexpr int kOracleMaxAtoms = 3;
constexpr int kOracleMaxConnectives = 6;
constexpr int kFuzzPerMode = 1000;
constexpr int kFragmentSamples = 500;
constexpr int kDecoratedProofs = 200;
constexpr int kHornSamples = 500;
constexpr unsigned kSeed = 20240611;

// Budget used to filter random candidates before the real runs. A search that
// succeeds under a smaller node budget succeeds identically at the default one.
SearchLimits screening() {
  SearchLimits l;
  l.node_budget = 20000;
  return l;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(const std::string& why) {
    pass = false;
    if (problems.size() < 5) problems.push_back(why);
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool checks(const Proof& p, const ProofClass& cls) { return check_proof(p, cls).ok(); }

bool checks(const Proof& p, ClassKind k) { return checks(p, ProofClass::of(k)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<CorpusEntry> corpus() {
  static const std::vector<CorpusEntry> entries = parse_corpus(read_file(SEQCALC_CORPUS));
  return entries;
}

const CorpusEntry* find_entry(const std::string& name) {
  static const std::vector<CorpusEntry> entries = corpus();
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---------------------------------------------------------------------------
// 1. Golden corpus

Outcome golden_corpus() {
  Outcome out;
  const auto entries = corpus();
  auto t0 = Clock::now();
  const auto results = run_corpus(entries, {}, workers());
  const double secs = since(t0);
  int relations = 0, bounded_no = 0;
  SearchLimits doubled;
  doubled.depth *= 2;
  for (const auto& r : results) {
    const CorpusEntry* e = find_entry(r.name);
    for (const auto& rel : r.relations) {
      ++relations;
      if (!rel.matches()) {
        out.fail(r.name + " " + std::string(relation_name(rel.relation)) + ": got " +
                 std::string(verdict_name(rel.verdict)));
        continue;
      }
      if (!rel.expected && rel.verdict == Verdict::NotProvedWithinLimits) {
        ++bounded_no;
        if (run_relation(e->sequent, rel.relation, doubled).proved())
          out.fail(r.name + " " + std::string(relation_name(rel.relation)) + " proved at doubled depth");
      }
    }
  }
  if (secs >= kCorpusSeconds) out.fail("corpus took " + std::to_string(secs) + " s");

  // Spot checks against the expected verdict table.
  const std::map<std::string, std::string> table = {
      {"peirce", "C+ I- O-"}, {"or-commute", "C+ I+ O-"}, {"or-to-exists", "C+ I+ O-"},
      {"exists-and", "C+ I+ O-"}};
  for (const auto& [name, want] : table) {
    const CorpusEntry* e = find_entry(name);
    if (!e) {
      out.fail("missing corpus entry " + name);
      continue;
    }
    std::string got;
    for (Relation rel : {Relation::C, Relation::I, Relation::O})
      got += std::string(got.empty() ? "" : " ") + std::string(relation_name(rel)) +
             (e->expected.at(rel) ? "+" : "-");
    if (got != want) out.fail(name + " expected " + want + " in corpus, found " + got);
  }

  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu entries, %d relations, %d bounded no re-run at depth %d, %.1f s",
                entries.size(), relations, bounded_no, doubled.depth, secs);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------------------
// 2. Truth-table oracle for classical propositional search

constexpr int kBot = -1;
constexpr int kTop = -2;

struct Shape {
  char op;  // 'a' leaf, '~', '&', '|', '>'
  std::shared_ptr<const Shape> l, r;
};
using ShapePtr = std::shared_ptr<const Shape>;

// All formula shapes with exactly `leaves` atom slots and `conn` connectives.
const std::vector<ShapePtr>& shapes(int leaves, int conn) {
  static std::map<std::pair<int, int>, std::vector<ShapePtr>> memo;
  auto key = std::make_pair(leaves, conn);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<ShapePtr> out;
  if (leaves == 1 && conn == 0) out.push_back(std::make_shared<Shape>(Shape{'a', nullptr, nullptr}));
  if (conn > 0) {
    for (const auto& s : shapes(leaves, conn - 1)) out.push_back(std::make_shared<Shape>(Shape{'~', s, nullptr}));
    for (int l1 = 1; l1 < leaves; ++l1)
      for (int c1 = 0; c1 < conn; ++c1)
        for (const auto& a : shapes(l1, c1))
          for (const auto& b : shapes(leaves - l1, conn - 1 - c1))
            for (char op : {'&', '|', '>'}) out.push_back(std::make_shared<Shape>(Shape{op, a, b}));
  }
  return memo[key] = std::move(out);
}

std::string render(const Shape& s, const std::vector<int>& atoms, std::size_t& next) {
  switch (s.op) {
    case 'a': {
      int a = atoms[next++];
      return a == kBot ? "bot" : a == kTop ? "top" : std::string(1, "pqr"[a]);
    }
    case '~': return "~(" + render(*s.l, atoms, next) + ")";
    default: {
      std::string a = render(*s.l, atoms, next);
      std::string b = render(*s.r, atoms, next);
      const char* op = s.op == '&' ? " & " : s.op == '|' ? " | " : " => ";
      return "(" + a + op + b + ")";
    }
  }
}

bool eval(const Shape& s, const std::vector<int>& atoms, std::size_t& next, unsigned valuation) {
  switch (s.op) {
    case 'a': {
      int a = atoms[next++];
      return a == kTop || (a != kBot && ((valuation >> a) & 1u));
    }
    case '~': return !eval(*s.l, atoms, next, valuation);
    default: {
      bool a = eval(*s.l, atoms, next, valuation);
      bool b = eval(*s.r, atoms, next, valuation);
      return s.op == '&' ? (a && b) : s.op == '|' ? (a || b) : (!a || b);
    }
  }
}

// Leaf labellings up to atom renaming: each slot holds bot, top, a letter
// already in use or the next unused letter.
void labellings(int n, std::vector<int>& cur, int used, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int a : {kBot, kTop}) {
    cur.push_back(a);
    labellings(n, cur, used, out);
    cur.pop_back();
  }
  for (int a = 0; a <= std::min(used, kOracleMaxAtoms - 1); ++a) {
    cur.push_back(a);
    labellings(n, cur, std::max(used, a + 1), out);
    cur.pop_back();
  }
}

struct OracleSlot {
  ShapePtr shape;
  int leaves;
  bool succ;
};

Outcome truth_table_oracle() {
  Outcome out;
  auto t0 = Clock::now();
  long total = 0, valid = 0;
  std::vector<OracleSlot> slots;

  std::function<void(int, int)> fill;
  auto run_sequent = [&] {
    bool any_succ = false;
    int leaves = 0;
    for (const auto& s : slots) {
      any_succ |= s.succ;
      leaves += s.leaves;
    }
    if (!any_succ) return;
    std::vector<std::vector<int>> labs;
    std::vector<int> cur;
    labellings(leaves, cur, 0, labs);
    for (const auto& lab : labs) {
      std::string ante, succ;
      std::size_t next = 0;
      for (const auto& s : slots) {
        std::string& side = s.succ ? succ : ante;
        if (!side.empty()) side += ", ";
        side += render(*s.shape, lab, next);
      }
      bool taut = true;
      for (unsigned v = 0; v < (1u << kOracleMaxAtoms) && taut; ++v) {
        std::size_t i = 0;
        bool all_ante = true, some_succ = false;
        for (const auto& s : slots) {
          bool b = eval(*s.shape, lab, i, v);
          if (s.succ)
            some_succ |= b;
          else
            all_ante &= b;
        }
        taut = !all_ante || some_succ;
      }
      ++total;
      valid += taut;
      const std::string text = ante + " |- " + succ;
      SearchOutcome o = prove(parse_sequent(text), SearchMode::Classical);
      Verdict want = taut ? Verdict::Proved : Verdict::Refuted;
      if (o.verdict != want)
        out.fail(text + ": " + std::string(verdict_name(o.verdict)));
      else if (o.proof && !checks(*o.proof, ClassKind::C))
        out.fail(text + ": emitted proof rejected");
    }
  };
  // Slots are filled left to right; remaining leaf and connective budgets shrink.
  fill = [&](int leaves_left, int conn_left) {
    if (!slots.empty()) run_sequent();
    for (int l = 1; l <= leaves_left; ++l)
      for (int c = 0; c <= conn_left; ++c)
        for (const auto& sh : shapes(l, c))
          for (bool succ : {false, true}) {
            slots.push_back({sh, l, succ});
            fill(leaves_left - l, conn_left - c);
            slots.pop_back();
          }
  };
  fill(kOracleMaxAtoms, kOracleMaxConnectives);

  const double secs = since(t0);
  if (secs >= kOracleSeconds) out.fail("oracle sweep took " + std::to_string(secs) + " s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%ld sequents (%ld valid) with <= %d leaves, <= %d connectives, %.1f s",
                total, valid, kOracleMaxAtoms, kOracleMaxConnectives, secs);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------------------
// Random first-order sequents

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  Term term(const std::vector<std::string>& vars) {
    if (!vars.empty() && coin(0.6)) return Term::var(vars[pick(static_cast<int>(vars.size()))]);
    if (coin(0.15)) return Term::app("f", {term(vars)});
    return Term::constant(coin(0.6) ? "a" : "b");
  }

  Formula atom(const std::vector<std::string>& vars) {
    switch (pick(5)) {
      case 0: return Formula::atom("p", {term(vars)});
      case 1: return Formula::atom("q", {term(vars)});
      case 2: return Formula::atom("r", {term(vars), term(vars)});
      case 3: return Formula::atom("s");
      default: return Formula::atom("u");
    }
  }

  Formula formula(std::vector<std::string> vars, int depth, bool quantifiers = true) {
    if (depth <= 0 || coin(0.25)) return coin(0.05) ? Formula::bot() : atom(vars);
    switch (pick(quantifiers ? 7 : 5)) {
      case 0: return Formula::conj(formula(vars, depth - 1, quantifiers), formula(vars, depth - 1, quantifiers));
      case 1: return Formula::disj(formula(vars, depth - 1, quantifiers), formula(vars, depth - 1, quantifiers));
      case 2:
      case 3: return Formula::imp(formula(vars, depth - 1, quantifiers), formula(vars, depth - 1, quantifiers));
      case 4: return Formula::neg(formula(vars, depth - 1, quantifiers));
      default: {
        std::string x = "x" + std::to_string(vars.size());
        vars.push_back(x);
        Formula body = abstract(formula(vars, depth - 1, quantifiers), x);
        return pick(2) ? Formula::forall(x, body) : Formula::exists(x, body);
      }
    }
  }

  // Antecedent formulas from which `g` follows, built backwards from its shape.
  void justify(const Formula& g, std::vector<Formula>& ante, int depth) {
    if (depth <= 0) {
      ante.push_back(g);
      return;
    }
    switch (g.kind()) {
      case FormulaKind::And:
        justify(g.left(), ante, depth - 1);
        justify(g.right(), ante, depth - 1);
        return;
      case FormulaKind::Or:
        justify(coin(0.5) ? g.left() : g.right(), ante, depth - 1);
        return;
      case FormulaKind::Exists:
        justify(instantiate(g.body(), Term::constant(coin(0.7) ? "a" : "b")), ante, depth - 1);
        return;
      case FormulaKind::Imp:
        if (coin(0.5)) {
          justify(g.right(), ante, depth - 1);
          return;
        }
        break;
      default: break;
    }
    switch (pick(5)) {
      case 0: ante.push_back(g); return;
      case 1: {
        Formula side = formula({}, 1, false);
        ante.push_back(Formula::imp(side, g));
        justify(side, ante, depth - 1);
        return;
      }
      case 2: ante.push_back(Formula::conj(g, formula({}, 1, false))); return;
      case 3: {
        Formula gen = abstract(replace_constant(g, "a", Term::var("y")), "y");
        ante.push_back(Formula::forall("y", gen));
        return;
      }
      default: {
        Formula other = formula({}, 1, false);
        ante.push_back(Formula::disj(g, other));
        ante.push_back(Formula::imp(other, g));
        return;
      }
    }
  }

  // Half of the sequents are built to be provable, half are unconstrained.
  Sequent sequent() {
    Formula goal = formula({}, 3);
    std::vector<Formula> ante;
    if (coin(0.5)) justify(goal, ante, 3);
    int noise = pick(3);
    for (int i = 0; i < noise; ++i) ante.push_back(formula({}, 2));
    return Sequent(ante, {goal});
  }

 private:
  std::mt19937 rng_;
};

// ---------------------------------------------------------------------------
// 3. Checker soundness fuzz and class inclusion

std::string text(const Sequent& s) { return to_string(s); }

// Verdict under the screening budget, retried at default limits when it fails.
bool provable(const Sequent& s, SearchMode m) {
  if (prove(s, m, screening()).proved()) return true;
  return prove(s, m).proved();
}

Outcome checker_fuzz() {
  Outcome out;
  Gen gen(kSeed);
  const SearchMode modes[] = {SearchMode::Classical, SearchMode::Intuitionistic, SearchMode::Uniform};
  std::map<SearchMode, int> proved;
  int attempts = 0, inclusions = 0;
  auto done = [&] {
    for (SearchMode m : modes)
      if (proved[m] < kFuzzPerMode) return false;
    return true;
  };
  while (!done() && attempts < 50 * kFuzzPerMode) {
    ++attempts;
    Sequent s = gen.sequent();
    std::map<SearchMode, SearchOutcome> res;
    for (SearchMode m : modes) res[m] = prove(s, m, screening());
    for (SearchMode m : modes) {
      const SearchOutcome& o = res[m];
      if (!o.proved()) continue;
      ++proved[m];
      CheckReport r = check_proof(*o.proof, o.cls);
      if (!r.ok()) out.fail(std::string(mode_name(m)) + " proof of " + text(s) + " rejected: " + r.reason);
      if (o.proof->conclusion != s) out.fail(std::string(mode_name(m)) + " proof of " + text(s) + " has the wrong end sequent");
    }
    const SearchOutcome& c = res[SearchMode::Classical];
    const SearchOutcome& i = res[SearchMode::Intuitionistic];
    const SearchOutcome& o = res[SearchMode::Uniform];
    if (o.proved()) {
      ++inclusions;
      if (!checks(*o.proof, ClassKind::I) || !checks(*o.proof, ClassKind::C))
        out.fail("uniform proof of " + text(s) + " is not an I- and C-proof");
      if (!i.proved() && !provable(s, SearchMode::Intuitionistic))
        out.fail(text(s) + " uniform but not intuitionistic");
    }
    if (i.proved()) {
      ++inclusions;
      if (!checks(*i.proof, ClassKind::C)) out.fail("intuitionistic proof of " + text(s) + " is not a C-proof");
      if (!c.proved() && !provable(s, SearchMode::Classical)) out.fail(text(s) + " intuitionistic but not classical");
    }
  }
  for (SearchMode m : modes)
    if (proved[m] < kFuzzPerMode)
      out.fail(std::string(mode_name(m)) + ": only " + std::to_string(proved[m]) + " provable instances found");
  char buf[200];
  std::snprintf(buf, sizeof buf, "%d candidates; proved C %d, I %d, O %d; %d inclusion checks", attempts,
                proved[SearchMode::Classical], proved[SearchMode::Intuitionistic], proved[SearchMode::Uniform],
                inclusions);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------------------
// 4. Fragment sequents: classical provability carries over to intuitionistic

struct Grammar {
  FragmentId id;
  const char* goal_ops;    // A and, O or, I implication, F forall, E exists
  const char* clause_ops;
};

const Grammar kGrammars[] = {
    {FragmentId::F1, "AOFE", "IAFE"},
    {FragmentId::F2, "AOE", "IAOEF"},
    {FragmentId::F3, "AOEF", "IAOE"},
    {FragmentId::F4, "AIF", "AOEF"},
};

class GrammarGen {
 public:
  GrammarGen(const Grammar& g, unsigned seed) : g_(g), gen_(seed) {}

  Formula goal(std::vector<std::string> vars, int depth) { return build(vars, depth, true); }
  Formula clause(std::vector<std::string> vars, int depth) { return build(vars, depth, false); }

  Sequent sequent() {
    std::vector<Formula> ante;
    int n = 1 + gen_.pick(3);
    for (int i = 0; i < n; ++i) ante.push_back(clause({}, 3));
    return Sequent(ante, {goal({}, 2)});
  }

 private:
  Formula leaf(const std::vector<std::string>& vars) {
    if (gen_.coin(0.04)) return Formula::bot();
    auto arg = [&] {
      if (!vars.empty() && gen_.coin(0.7)) return Term::var(vars[gen_.pick(static_cast<int>(vars.size()))]);
      return Term::constant(gen_.coin(0.8) ? "a" : "b");
    };
    switch (gen_.pick(4)) {
      case 0: return Formula::atom("p", {arg()});
      case 1: return Formula::atom("q", {arg()});
      case 2: return Formula::atom("s");
      default: return Formula::atom("u");
    }
  }

  Formula build(std::vector<std::string>& vars, int depth, bool is_goal) {
    const std::string ops = is_goal ? g_.goal_ops : g_.clause_ops;
    if (depth <= 0 || gen_.coin(0.3)) return leaf(vars);
    switch (ops[gen_.pick(static_cast<int>(ops.size()))]) {
      case 'A': return Formula::conj(build(vars, depth - 1, is_goal), build(vars, depth - 1, is_goal));
      case 'O': return Formula::disj(build(vars, depth - 1, is_goal), build(vars, depth - 1, is_goal));
      case 'I': {
        Formula l = build(vars, depth - 1, !is_goal);
        return Formula::imp(l, build(vars, depth - 1, is_goal));
      }
      default: {
        const bool universal = ops.find('F') != std::string::npos &&
                               (ops.find('E') == std::string::npos || gen_.coin(0.5));
        std::string x = "x" + std::to_string(vars.size());
        vars.push_back(x);
        Formula body = abstract(build(vars, depth - 1, is_goal), x);
        vars.pop_back();
        return universal ? Formula::forall(x, body) : Formula::exists(x, body);
      }
    }
  }

  Grammar g_;
  Gen gen_;
};

Outcome fragment_transfer() {
  Outcome out;
  std::string summary;
  for (const Grammar& g : kGrammars) {
    GrammarGen gen(g, kSeed + static_cast<unsigned>(g.id));
    int proved = 0, attempts = 0;
    while (proved < kFragmentSamples && attempts < 40 * kFragmentSamples) {
      ++attempts;
      Sequent s = gen.sequent();
      if (!fragment_guarantee(s, g.id)) {
        out.fail("generated " + text(s) + " outside " + std::string(fragment_name(g.id)));
        continue;
      }
      if (!prove(s, SearchMode::Classical, screening()).proved()) continue;
      ++proved;
      if (!provable(s, SearchMode::Intuitionistic))
        out.fail(std::string(fragment_name(g.id)) + ": " + text(s) + " classical only");
    }
    if (proved < kFragmentSamples)
      out.fail(std::string(fragment_name(g.id)) + ": only " + std::to_string(proved) + " provable samples");
    summary += std::string(summary.empty() ? "" : ", ") + std::string(fragment_name(g.id)) + " " +
               std::to_string(proved) + "/" + std::to_string(attempts);
  }

  // Corpus sequents inside a fragment obey the same transfer.
  int inside = 0;
  for (const auto& e : corpus()) {
    if (e.sequent.succ().size() != 1) continue;
    bool any = false;
    for (const Grammar& g : kGrammars) any |= fragment_guarantee(e.sequent, g.id);
    if (!any) continue;
    ++inside;
    if (prove(e.sequent, SearchMode::Classical).proved() && !prove(e.sequent, SearchMode::Intuitionistic).proved())
      out.fail("corpus " + e.name + " lies in a fragment but is classical only");
  }
  out.detail = summary + " proved classically then intuitionistically; " + std::to_string(inside) +
               " corpus sequents inside a fragment";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Proof transformations

bool uses_any(const Proof& p, std::initializer_list<RuleId> rules) {
  const RuleUsageProfile u = rule_usage(p);
  for (RuleId r : rules)
    if (u.count(r)) return true;
  return false;
}

int count_rule(const Proof& p, RuleId r) {
  int n = p.rule == r;
  for (const auto& q : p.premises) n += count_rule(q, r);
  return n;
}

bool extraction_eligible(const Proof& p) {
  using R = RuleId;
  return !uses_any(p, {R::ImpR, R::OrL}) || !uses_any(p, {R::ImpL, R::OrR1, R::OrR2, R::ExR});
}

// Inserts contractions at random nodes: the subproof is weakened by a copy of
// one conclusion formula and a contraction removes the copy again.
Proof decorate(const Proof& p, Gen& gen) {
  std::vector<Proof> prem;
  for (const auto& q : p.premises) prem.push_back(decorate(q, gen));
  Proof node = make_proof(p.rule, p.conclusion, p.principal, std::move(prem), p.witness, p.eigen);
  if (!gen.coin(0.3)) return node;
  const bool ante = p.conclusion.succ().empty() || (!p.conclusion.ante().empty() && gen.coin(0.5));
  const auto& side = ante ? p.conclusion.ante() : p.conclusion.succ();
  if (side.empty()) return node;
  const Formula f = side[gen.pick(static_cast<int>(side.size()))];
  Proof wider = ante ? weaken(node, {f}, {}) : weaken(node, {}, {f});
  const Side sd = ante ? Side::Ante : Side::Succ;
  return make_proof(ante ? RuleId::ContrL : RuleId::ContrR, p.conclusion, locate(p.conclusion, sd, f),
                    {std::move(wider)});
}

struct ProofPool {
  std::vector<Proof> classical, starred, istarred;
};

ProofPool proof_pool(int size) {
  ProofPool pool;
  Gen gen(kSeed + 17);
  SearchOptions keep;
  keep.keep_starred = true;
  for (int attempts = 0; static_cast<int>(pool.starred.size()) < size && attempts < 50 * size; ++attempts) {
    Sequent s = gen.sequent();
    SearchOutcome c = prove(s, SearchMode::Classical, screening());
    if (!c.proved()) continue;
    pool.classical.push_back(*c.proof);
    pool.starred.push_back(*prove(s, SearchMode::Classical, screening(), keep).proof);
    SearchOutcome i = prove(s, SearchMode::Intuitionistic, screening(), keep);
    if (i.proved()) pool.istarred.push_back(*i.proof);
  }
  return pool;
}

Outcome transformations() {
  Outcome out;
  using R = RuleId;
  const ProofPool pool = proof_pool(kDecoratedProofs);
  Gen gen(kSeed + 29);

  int decorated = 0, contractions = 0;
  for (const Proof& star : pool.starred) {
    Proof d = decorate(star, gen);
    contractions += count_rule(d, R::ContrL) + count_rule(d, R::ContrR);
    CheckReport rd = check_proof(d, ProofClass::of(ClassKind::Cplus));
    if (!rd.ok()) {
      out.fail("decorated proof of " + text(star.conclusion) + " rejected: " + rd.reason);
      continue;
    }
    ++decorated;
    Proof e = eliminate_contractions(d);
    if (uses_any(e, {R::ContrL, R::ContrR})) out.fail("contractions left in " + text(e.conclusion));
    if (e.conclusion != star.conclusion) out.fail("end sequent changed for " + text(star.conclusion));
    if (!checks(e, ClassKind::Cstar)) out.fail("eliminated proof of " + text(star.conclusion) + " rejected");
  }
  if (decorated < kDecoratedProofs) out.fail("only " + std::to_string(decorated) + " decorated proofs");

  int weakened = 0;
  auto try_weaken = [&](const Proof& p, ClassKind k) {
    std::vector<Formula> extra_ante{gen.formula({}, 2)};
    // Reuse an eigenvariable name of the proof to force a clash.
    for (const auto& sym : proof_symbols(p))
      if (sym.rfind("c", 0) == 0) extra_ante.push_back(Formula::atom("p", {Term::constant(sym)}));
    std::vector<Formula> extra_succ;
    if (k != ClassKind::Istar) extra_succ.push_back(gen.formula({}, 2));
    Proof w = weaken(p, extra_ante, extra_succ);
    ++weakened;
    if (w.height > p.height) out.fail("weaken raised the height of " + text(p.conclusion));
    if (!checks(w, k)) out.fail("weakened proof of " + text(p.conclusion) + " rejected");
  };
  for (const Proof& p : pool.classical) try_weaken(p, ClassKind::C);
  for (const Proof& p : pool.istarred) try_weaken(p, ClassKind::Istar);

  int expanded = 0;
  for (const Proof& p : pool.starred) {
    ++expanded;
    if (!checks(expand_starred(p), ClassKind::C)) out.fail("expanded C*-proof of " + text(p.conclusion) + " rejected");
  }
  for (const Proof& p : pool.istarred) {
    ++expanded;
    if (!checks(expand_starred(p), ClassKind::I)) out.fail("expanded I*-proof of " + text(p.conclusion) + " rejected");
  }

  int corpus_extracted = 0, random_extracted = 0;
  auto try_extract = [&](const Proof& c, int& counter) {
    if (!extraction_eligible(c)) return;
    ++counter;
    try {
      Proof i = extract_intuitionistic(c);
      if (!checks(i, ClassKind::I)) out.fail("extracted proof of " + text(c.conclusion) + " rejected");
      if (i.conclusion.ante() != c.conclusion.ante() ||
          !c.conclusion.contains(Side::Succ, i.conclusion.succ().front()))
        out.fail("extracted proof of " + text(c.conclusion) + " has an unrelated end sequent");
    } catch (const TransformError& e) {
      out.fail("extraction of " + text(c.conclusion) + " failed: " + e.what());
    }
  };
  for (const auto& e : corpus()) {
    SearchOutcome c = prove(e.sequent, SearchMode::Classical);
    if (c.proved()) try_extract(*c.proof, corpus_extracted);
  }
  for (const Proof& c : pool.classical) try_extract(c, random_extracted);

  // Rule-usage conditions predict intuitionistic provability.
  int predicted = 0;
  for (const Proof& c : pool.classical) {
    if (c.conclusion.succ().size() != 1 || !implies_intuitionistic(rule_usage(c))) continue;
    ++predicted;
    if (!provable(c.conclusion, SearchMode::Intuitionistic))
      out.fail(text(c.conclusion) + " meets a rule condition but has no intuitionistic proof");
  }

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%d decorated proofs (%d contractions) eliminated, %d weakenings, %d expansions, "
                "%d corpus + %d random extractions, %d condition predictions",
                decorated, contractions, weakened, expanded, corpus_extracted, random_extracted, predicted);
  out.detail = buf;
  return out;
}

// ---------------------------------------------------------------------------
// 6. Restart soundness

class HornGen {
 public:
  explicit HornGen(unsigned seed) : gen_(seed) {}

  Sequent sequent() {
    std::vector<Formula> ante;
    int facts = 1 + gen_.pick(3), rules = gen_.pick(4);
    for (int i = 0; i < facts; ++i)
      ante.push_back(gen_.coin(0.2) ? Formula::disj(atom(Term::constant(c())), atom(Term::constant(c())))
                                    : atom(Term::constant(c())));
    for (int i = 0; i < rules; ++i) ante.push_back(rule());
    return Sequent(ante, {goal()});
  }

 private:
  std::string c() { return gen_.coin(0.6) ? "a" : "b"; }

  Formula atom(const Term& t) {
    switch (gen_.pick(5)) {
      case 0: return Formula::atom("p", {t});
      case 1: return Formula::atom("q", {t});
      case 2: return Formula::atom("r", {t});
      case 3: return Formula::atom("s");
      default: return Formula::atom("u");
    }
  }

  // forall x. body => head, with bot heads acting as constraints.
  Formula rule() {
    const Term x = Term::var("x");
    Formula body = atom(gen_.coin(0.8) ? x : Term::constant(c()));
    if (gen_.coin(0.4)) body = Formula::conj(body, atom(gen_.coin(0.5) ? x : Term::constant(c())));
    Formula head = gen_.coin(0.15) ? Formula::bot() : atom(x);
    if (gen_.coin(0.15)) head = Formula::disj(head, atom(x));
    return Formula::forall("x", abstract(Formula::imp(body, head), "x"));
  }

  Formula goal() {
    const Term t = Term::constant(c());
    switch (gen_.pick(6)) {
      case 0: return Formula::conj(atom(t), atom(Term::constant(c())));
      case 1: return Formula::disj(atom(t), atom(Term::constant(c())));
      case 2: return Formula::exists("y", abstract(atom(Term::var("y")), "y"));
      case 3: return Formula::imp(atom(t), atom(Term::constant(c())));
      case 4: return Formula::disj(atom(t), Formula::neg(atom(t)));
      default: return atom(t);
    }
  }

  Gen gen_;
};

Outcome restart_soundness() {
  Outcome out;
  int corpus_proved = 0, random_proved = 0;
  auto check = [&](const Sequent& s, const SearchOutcome& r, int& counter) {
    if (!r.proved()) return;
    ++counter;
    if (!checks(*r.proof, r.cls)) out.fail("restart proof of " + text(s) + " rejected");
    if (!provable(s, SearchMode::Classical)) out.fail(text(s) + " restart-provable but not classical");
  };
  for (const auto& e : corpus()) {
    if (e.sequent.succ().size() != 1) continue;
    check(e.sequent, prove_restart(e.sequent.ante(), e.sequent.succ().front()), corpus_proved);
  }
  HornGen gen(kSeed + 41);
  for (int i = 0; i < kHornSamples; ++i) {
    Sequent s = gen.sequent();
    check(s, prove_restart(s.ante(), s.succ().front(), screening()), random_proved);
  }
  out.detail = std::to_string(corpus_proved) + " corpus and " + std::to_string(random_proved) + " of " +
               std::to_string(kHornSamples) + " Horn-like sequents restart-provable, all classically provable";
  return out;
}

// ---------------------------------------------------------------------------
// 7. Herbrandization preserves classical verdicts

Outcome herbrand_agreement() {
  Outcome out;
  SearchOptions herb;
  herb.herbrandize = true;
  int agreed = 0, proved = 0;
  for (const auto& e : corpus()) {
    SearchOutcome plain = prove(e.sequent, SearchMode::Classical);
    SearchOutcome h = prove(e.sequent, SearchMode::Classical, {}, herb);
    if (plain.proved() != h.proved()) {
      out.fail(e.name + ": " + std::string(verdict_name(plain.verdict)) + " vs herbrandized " +
               std::string(verdict_name(h.verdict)));
      continue;
    }
    ++agreed;
    proved += plain.proved();
    if (h.proved() && !checks(*h.proof, ClassKind::C)) out.fail(e.name + ": herbrandized proof rejected");
  }
  out.detail = std::to_string(agreed) + " corpus sequents agree (" + std::to_string(proved) + " proved)";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "golden corpus", golden_corpus},
      {2, "truth-table oracle", truth_table_oracle},
      {3, "checker fuzz and class inclusion", checker_fuzz},
      {4, "fragment transfer", fragment_transfer},
      {5, "proof transformations", transformations},
      {6, "restart soundness", restart_soundness},
      {7, "herbrandization agreement", herbrand_agreement},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all &= o.pass;
    std::printf("%s %d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), since(t0));
    for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
