// seqcalc: prove, check, analyze and classify sequents; run golden corpora.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "seqcalc/calculus.hpp"
#include "seqcalc/corpus.hpp"
#include "seqcalc/fragments.hpp"
#include "seqcalc/parser.hpp"
#include "seqcalc/proof_json.hpp"
#include "seqcalc/search.hpp"
#include "seqcalc/transform.hpp"

using namespace seqcalc;

namespace {

constexpr int kProved = 0;
constexpr int kRefuted = 1;
constexpr int kNotProved = 2;
constexpr int kUsage = 64;
constexpr int kDataError = 65;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string input_text(const std::string& inline_text, const std::string& file) {
  if (!file.empty()) return read_file(file);
  if (inline_text == "-") return read_file("-");
  if (inline_text.empty()) throw UsageError("no input given");
  return inline_text;
}

std::string profile_string(const RuleUsageProfile& prof) {
  std::string out;
  for (RuleId r : prof) out += (out.empty() ? "" : " ") + std::string(rule_name(r));
  return out;
}

// ---------------------------------------------------------------- prove

struct ProveArgs {
  std::string logic = "c";
  bool restart = false;
  int depth = SearchLimits{}.depth;
  int qbudget = SearchLimits{}.qbudget;
  std::size_t nodes = SearchLimits{}.node_budget;
  bool herbrandize = false;
  bool strengthened = true;
  bool keep_starred = false;
  bool tree = false;
  std::string emit;
  std::string sequent;
  std::string file;
};

int cmd_prove(const ProveArgs& a) {
  if (a.herbrandize && a.logic != "c")
    throw UsageError("--herbrandize is only sound for classical search");
  if (a.restart && a.logic == "c") throw UsageError("--restart is a uniform search; use --logic o or i");
  Sequent s;
  try {
    s = parse_sequent(input_text(a.sequent, a.file));
  } catch (const ParseError& e) {
    throw DataError(std::string("parse error at ") + e.what());
  }
  SearchLimits limits;
  limits.depth = a.depth;
  limits.qbudget = a.qbudget;
  limits.node_budget = a.nodes;
  limits.strengthened_axioms = a.strengthened;
  SearchOptions opts;
  opts.herbrandize = a.herbrandize;
  opts.keep_starred = a.keep_starred;
  SearchOutcome o;
  try {
    if (a.restart) {
      if (s.succ().size() != 1) throw UsageError("--restart needs exactly one succedent formula");
      o = prove_restart(s.ante(), s.succ().front(), limits, opts);
    } else {
      auto mode = mode_from_name(a.logic == "c" ? "C" : a.logic == "i" ? "I" : "O");
      o = prove(s, *mode, limits, opts);
    }
  } catch (const LimitError& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << verdict_name(o.verdict) << " (" << o.nodes << " nodes)\n";
  if (o.herbrand) std::cout << "searched: " << to_string(*o.herbrand) << "\n";
  if (o.proof) {
    std::cout << "class: " << class_name(o.cls.kind) << ", height " << o.proof->height << ", "
              << proof_size(*o.proof) << " nodes\n";
    if (a.tree) std::cout << to_tree_string(*o.proof);
    if (!a.emit.empty()) {
      std::ofstream out(a.emit);
      if (!out) throw DataError("cannot write " + a.emit);
      out << write_proof_json(*o.proof, o.cls) << "\n";
    }
  }
  switch (o.verdict) {
    case Verdict::Proved: return kProved;
    case Verdict::Refuted: return kRefuted;
    default: return kNotProved;
  }
}

// ---------------------------------------------------------------- check / analyze

ProofDocument load_proof(const std::string& path) {
  try {
    return read_proof_json(read_file(path));
  } catch (const ProofFormatError& e) {
    throw DataError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  }
}

int cmd_check(const std::string& path, const std::string& cls_name, const std::string& goal,
              bool strengthened) {
  ProofDocument doc = load_proof(path);
  ProofClass cls = doc.cls;
  if (!cls_name.empty()) {
    auto k = class_from_name(cls_name);
    if (!k) throw UsageError("unknown class '" + cls_name + "'");
    cls.kind = *k;
    if (!goal.empty()) cls.goal = parse_formula(goal);
  }
  CheckReport rep = check_proof(doc.proof, cls, strengthened);
  if (rep.ok()) {
    std::cout << "valid " << class_name(cls.kind) << " proof of " << to_string(doc.proof.conclusion)
              << "\n";
    return 0;
  }
  std::string where;
  for (std::size_t i : rep.path) where += "/" + std::to_string(i);
  std::cout << (rep.status == CheckStatus::Malformed ? "malformed" : "invalid") << " at "
            << (where.empty() ? "/" : where) << ": " << rep.reason << "\n";
  return rep.status == CheckStatus::Malformed ? kDataError : 1;
}

int cmd_analyze(const std::string& path) {
  ProofDocument doc = load_proof(path);
  Proof p = doc.proof;
  RuleUsageProfile raw = rule_usage(p);
  std::cout << "rules: " << profile_string(raw) << "\n";
  bool starred = false;
  for (RuleId r : raw)
    if (static_cast<int>(r) > static_cast<int>(RuleId::AllR)) starred = true;
  if (starred) {
    try {
      p = expand_starred(p);
    } catch (const TransformError& e) {
      std::cout << "cannot analyze proofs using restart or modified rules: " << e.what() << "\n";
      return 1;
    }
    std::cout << "expanded rules: " << profile_string(rule_usage(p)) << "\n";
  }
  RuleUsageProfile prof = rule_usage(p);
  auto c = implies_intuitionistic(prof);
  std::cout << "intuitionistic proof of the same sequent: "
            << (c ? "guaranteed (" + std::string(condition_text(*c)) + ")" : std::string("no guarantee"))
            << "\n";
  for (auto [stage, label] : {std::pair{ReductionStage::ClassicalToI,
                                        "intuitionistic proof of the augmented sequent"},
                              std::pair{ReductionStage::IToO, "uniform proof of the augmented sequent"}}) {
    auto k = reduction_conditions(prof, stage);
    std::cout << label << ": "
              << (k ? "guaranteed by condition " + std::to_string(*k) + " (" +
                          std::string(reduction_text(stage, *k)) + ")"
                    : std::string("no guarantee"))
              << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- classify / corpus

int cmd_classify(const std::string& frag, const std::string& role, const std::string& text,
                 bool sequent) {
  auto f = fragment_from_name(frag);
  if (!f) throw UsageError("unknown fragment '" + frag + "'");
  try {
    if (sequent) {
      std::cout << (fragment_guarantee(parse_sequent(text), *f) ? "yes" : "no") << "\n";
      return 0;
    }
    auto r = role_from_name(role);
    if (!r) throw UsageError("unknown role '" + role + "'");
    std::cout << (classify(parse_formula(text), *f, *r) ? "yes" : "no") << "\n";
  } catch (const ParseError& e) {
    throw DataError(std::string("parse error at ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int cmd_corpus(const std::string& path, const SearchLimits& limits, unsigned workers) {
  std::vector<CorpusEntry> entries;
  try {
    entries = parse_corpus(read_file(path));
  } catch (const CorpusError& e) {
    throw DataError(path + ": " + e.what());
  }
  std::vector<EntryResult> results = run_corpus(entries, limits, workers);
  int failures = 0;
  for (const auto& r : results) {
    std::ostringstream row;
    row << (r.matches() ? "PASS " : "FAIL ") << r.name;
    for (const auto& rel : r.relations)
      row << "  " << relation_name(rel.relation) << "=" << (rel.expected ? "yes" : "no") << ":"
          << verdict_name(rel.verdict) << (rel.matches() ? "" : "!");
    std::cout << row.str() << "\n";
    if (!r.matches()) ++failures;
  }
  std::cout << results.size() - failures << "/" << results.size() << " entries match\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order sequent calculus toolkit"};
  app.require_subcommand(1);

  ProveArgs pa;
  auto* prove_cmd = app.add_subcommand("prove", "search for a proof of a sequent");
  prove_cmd->add_option("--logic", pa.logic, "c, i or o")->check(CLI::IsMember({"c", "i", "o"}));
  prove_cmd->add_flag("--restart", pa.restart, "uniform search with the succedent as restart goal");
  prove_cmd->add_option("--depth", pa.depth, "rule applications per branch");
  prove_cmd->add_option("--qbudget", pa.qbudget, "quantifier expansion rounds per branch");
  prove_cmd->add_option("--node-budget", pa.nodes, "total search nodes");
  prove_cmd->add_flag("--herbrandize", pa.herbrandize, "remove strong quantifiers first (classical)");
  prove_cmd->add_flag("--strengthened-axioms,!--no-strengthened-axioms", pa.strengthened,
                      "close branches on any common formula");
  prove_cmd->add_flag("--keep-starred", pa.keep_starred, "emit the starred-calculus proof");
  prove_cmd->add_flag("--tree", pa.tree, "print the proof tree");
  prove_cmd->add_option("--emit", pa.emit, "write the proof as JSON");
  prove_cmd->add_option("-f,--file", pa.file, "read the sequent from a file");
  prove_cmd->add_option("sequent", pa.sequent, "sequent text, or - for stdin");

  std::string check_path, check_class, check_goal;
  bool check_strengthened = false;
  auto* check_cmd = app.add_subcommand("check", "validate a proof JSON file");
  check_cmd->add_option("proof", check_path, "proof file, or - for stdin")->required();
  check_cmd->add_option("--class", check_class, "class to check against (default: the file's)");
  check_cmd->add_option("--goal", check_goal, "restart goal for IG/OG");
  check_cmd->add_flag("--strengthened-axioms", check_strengthened, "accept any common formula as axiom");

  std::string analyze_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "rule usage of a proof and what it guarantees");
  analyze_cmd->add_option("proof", analyze_path, "proof file, or - for stdin")->required();

  std::string frag, role = "goal", text;
  bool as_sequent = false;
  auto* classify_cmd = app.add_subcommand("classify", "test membership in a formula class");
  classify_cmd->add_option("--fragment", frag, "f1, f2, f3, f4, lp-int or lp-cls")->required();
  classify_cmd->add_option("--role", role, "goal, clause or gprime");
  classify_cmd->add_flag("--sequent", as_sequent, "treat the input as a sequent (clauses |- goal)");
  classify_cmd->add_option("text", text, "formula or sequent")->required();

  std::string corpus_path;
  SearchLimits corpus_limits;
  unsigned workers = 1;
  auto* corpus_cmd = app.add_subcommand("corpus", "golden corpus runner");
  corpus_cmd->require_subcommand(1);
  auto* corpus_run = corpus_cmd->add_subcommand("run", "run every entry and compare verdicts");
  corpus_run->add_option("file", corpus_path, "corpus file")->required();
  corpus_run->add_option("--depth", corpus_limits.depth, "rule applications per branch");
  corpus_run->add_option("--qbudget", corpus_limits.qbudget, "quantifier expansion rounds");
  corpus_run->add_option("--node-budget", corpus_limits.node_budget, "total search nodes");
  corpus_run->add_option("-j,--workers", workers, "parallel workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*prove_cmd) return cmd_prove(pa);
    if (*check_cmd) return cmd_check(check_path, check_class, check_goal, check_strengthened);
    if (*analyze_cmd) return cmd_analyze(analyze_path);
    if (*classify_cmd) return cmd_classify(frag, role, text, as_sequent);
    if (*corpus_run) return cmd_corpus(corpus_path, corpus_limits, workers);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}
