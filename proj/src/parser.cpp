#include "seqcalc/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace seqcalc {

ParseError::ParseError(const std::string& message, SourceSpan span)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
                         message),
      span_(span),
      detail_(message) {}

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, And, Or, Imp, Not, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Imp: return "'=>'";
    case Tok::Not: return "'~'";
    case Tok::Turnstile: return "'|-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (true) {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) advance(1);
    SourceSpan sp{line, col, i, i};
    if (i >= src.size()) {
      out.push_back({Tok::End, "", sp});
      return out;
    }
    char c = src[i];
    auto emit = [&](Tok k, std::size_t n) {
      sp.end = i + n;
      out.push_back({k, std::string(src.substr(i, n)), sp});
      advance(n);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                                src[j] == '\''))
        ++j;
      if (std::isupper(static_cast<unsigned char>(c))) {
        sp.end = j;
        throw ParseError("capitalized identifier '" + std::string(src.substr(i, j - i)) +
                             "' is reserved for metavariables",
                         sp);
      }
      emit(Tok::Ident, j - i);
    } else if (src.substr(i, 2) == "|-") {
      emit(Tok::Turnstile, 2);
    } else if (src.substr(i, 2) == "=>") {
      emit(Tok::Imp, 2);
    } else if (c == '|') {
      emit(Tok::Or, 1);
    } else if (c == '&') {
      emit(Tok::And, 1);
    } else if (c == '~') {
      emit(Tok::Not, 1);
    } else if (c == '(') {
      emit(Tok::LParen, 1);
    } else if (c == ')') {
      emit(Tok::RParen, 1);
    } else if (c == ',') {
      emit(Tok::Comma, 1);
    } else if (c == '.') {
      emit(Tok::Dot, 1);
    } else {
      sp.end = i + 1;
      throw ParseError(std::string("unexpected character '") + c + "'", sp);
    }
  }
}

bool is_keyword(const std::string& s) {
  return s == "top" || s == "bot" || s == "forall" || s == "exists";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Formula formula() { return imp(); }

  Term term() {
    Token id = expect(Tok::Ident);
    if (is_keyword(id.text)) throw ParseError("keyword '" + id.text + "' used as a term", id.span);
    if (peek().kind != Tok::LParen) {
      for (std::size_t k = scope_.size(); k-- > 0;)
        if (scope_[k] == id.text) return Term::bound(static_cast<int>(scope_.size() - 1 - k));
      note_arity(functions_, id, 0);
      return Term::constant(id.text);
    }
    std::vector<Term> args = arguments();
    note_arity(functions_, id, args.size());
    return Term::app(id.text, std::move(args));
  }

  std::vector<Formula> formula_list(Tok stop) {
    std::vector<Formula> out;
    if (peek().kind == stop) return out;
    out.push_back(formula());
    while (peek().kind == Tok::Comma) {
      next();
      out.push_back(formula());
    }
    return out;
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  Token expect(Tok k) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + describe(k) + ", found " + found(), peek().span);
    return next();
  }

  void expect_end() {
    if (peek().kind != Tok::End)
      throw ParseError(std::string("unexpected ") + found(), peek().span);
  }

 private:
  std::string found() const {
    const Token& t = peek();
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  Formula imp() {
    Formula lhs = disj();
    if (peek().kind == Tok::Imp) {
      next();
      return Formula::imp(lhs, imp());
    }
    return lhs;
  }

  Formula disj() {
    Formula acc = conj();
    while (peek().kind == Tok::Or) {
      next();
      acc = Formula::disj(acc, conj());
    }
    return acc;
  }

  Formula conj() {
    Formula acc = unary();
    while (peek().kind == Tok::And) {
      next();
      acc = Formula::conj(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    const Token& t = peek();
    if (t.kind == Tok::Not) {
      next();
      return Formula::neg(unary());
    }
    if (t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) {
      bool universal = t.text == "forall";
      next();
      Token var = expect(Tok::Ident);
      if (is_keyword(var.text))
        throw ParseError("keyword '" + var.text + "' used as a bound variable", var.span);
      expect(Tok::Dot);
      scope_.push_back(var.text);
      Formula body = imp();
      scope_.pop_back();
      return universal ? Formula::forall(var.text, body) : Formula::exists(var.text, body);
    }
    return atom();
  }

  Formula atom() {
    if (peek().kind == Tok::LParen) {
      next();
      Formula f = formula();
      expect(Tok::RParen);
      return f;
    }
    Token id = expect(Tok::Ident);
    if (id.text == "top") return Formula::top();
    if (id.text == "bot") return Formula::bot();
    if (is_keyword(id.text)) throw ParseError("misplaced keyword '" + id.text + "'", id.span);
    std::vector<Term> args;
    if (peek().kind == Tok::LParen) args = arguments();
    note_arity(predicates_, id, args.size());
    return Formula::atom(id.text, std::move(args));
  }

  std::vector<Term> arguments() {
    expect(Tok::LParen);
    std::vector<Term> args;
    args.push_back(term());
    while (peek().kind == Tok::Comma) {
      next();
      args.push_back(term());
    }
    expect(Tok::RParen);
    return args;
  }

  void note_arity(std::map<std::string, std::size_t>& table, const Token& id, std::size_t n) {
    auto [it, inserted] = table.emplace(id.text, n);
    if (!inserted && it->second != n)
      throw ParseError("'" + id.text + "' used with " + std::to_string(n) +
                           " arguments, previously " + std::to_string(it->second),
                       id.span);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
  std::map<std::string, std::size_t> functions_;
  std::map<std::string, std::size_t> predicates_;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect_end();
  return f;
}

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.expect_end();
  return t;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  std::vector<Formula> ante = p.formula_list(Tok::Turnstile);
  p.expect(Tok::Turnstile);
  std::vector<Formula> succ = p.formula_list(Tok::End);
  p.expect_end();
  return Sequent(std::move(ante), std::move(succ));
}

}  // namespace seqcalc
