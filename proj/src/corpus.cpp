#include "seqcalc/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "seqcalc/parser.hpp"
#include "seqcalc/transform.hpp"

namespace seqcalc {

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::C: return "C";
    case Relation::I: return "I";
    case Relation::O: return "O";
    case Relation::R: return "R";
    case Relation::A: return "A";
  }
  return "?";
}

CorpusError::CorpusError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::optional<Relation> relation_from(const std::string& s) {
  for (Relation r : {Relation::C, Relation::I, Relation::O, Relation::R, Relation::A})
    if (s == relation_name(r)) return r;
  return std::nullopt;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = trim(raw.substr(0, raw.find('#')));
    if (body.empty()) continue;
    std::vector<std::string> fields = split(body, ';');
    if (fields.size() < 5) throw CorpusError(line, "expected name ; sequent ; C=.. ; I=.. ; O=..");
    CorpusEntry e;
    e.name = fields[0];
    e.line = line;
    e.source = fields[1];
    if (e.name.empty()) throw CorpusError(line, "empty entry name");
    if (!names.insert(e.name).second) throw CorpusError(line, "duplicate entry name '" + e.name + "'");
    try {
      e.sequent = parse_sequent(fields[1]);
    } catch (const std::exception& ex) {
      throw CorpusError(line, std::string("bad sequent: ") + ex.what());
    }
    for (std::size_t i = 2; i < fields.size(); ++i) {
      const std::string& f = fields[i];
      std::size_t eq = f.find('=');
      if (eq == std::string::npos) throw CorpusError(line, "expected REL=yes|no, got '" + f + "'");
      auto rel = relation_from(trim(f.substr(0, eq)));
      std::string val = trim(f.substr(eq + 1));
      if (!rel) throw CorpusError(line, "unknown relation '" + trim(f.substr(0, eq)) + "'");
      if (val != "yes" && val != "no") throw CorpusError(line, "expected yes or no, got '" + val + "'");
      if (!e.expected.emplace(*rel, val == "yes").second)
        throw CorpusError(line, "relation given twice: " + std::string(relation_name(*rel)));
    }
    for (Relation r : {Relation::C, Relation::I, Relation::O})
      if (!e.expected.count(r))
        throw CorpusError(line, "missing expectation for " + std::string(relation_name(r)));
    if ((e.expected.count(Relation::I) || e.expected.count(Relation::O) ||
         e.expected.count(Relation::R) || e.expected.count(Relation::A)) &&
        e.sequent.succ().size() != 1)
      throw CorpusError(line, "I, O, R and A need exactly one succedent formula");
    out.push_back(std::move(e));
  }
  return out;
}

bool EntryResult::matches() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const RelationResult& r) { return r.matches(); });
}

SearchOutcome run_relation(const Sequent& s, Relation r, const SearchLimits& limits) {
  switch (r) {
    case Relation::C: return prove(s, SearchMode::Classical, limits);
    case Relation::I: return prove(s, SearchMode::Intuitionistic, limits);
    case Relation::O: return prove(s, SearchMode::Uniform, limits);
    case Relation::R: return prove_restart(s.ante(), s.succ().front(), limits);
    case Relation::A: return prove(augment(s), SearchMode::Intuitionistic, limits);
  }
  throw std::logic_error("unknown relation");
}

std::vector<EntryResult> run_corpus(const std::vector<CorpusEntry>& entries,
                                    const SearchLimits& limits, unsigned workers) {
  std::vector<EntryResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      EntryResult res;
      res.name = entries[i].name;
      for (const auto& [rel, want] : entries[i].expected) {
        SearchOutcome o = run_relation(entries[i].sequent, rel, limits);
        res.relations.push_back({rel, want, o.verdict, o.nodes});
      }
      results[i] = std::move(res);
    }
  };
  workers = std::max(1u, workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(),
            [](const EntryResult& a, const EntryResult& b) { return a.name < b.name; });
  return results;
}

}  // namespace seqcalc
