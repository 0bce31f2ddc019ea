// Concrete ASCII syntax:
//   formula := imp ; imp := or ("=>" imp)? ; or := and ("|" and)* ;
//   and := unary ("&" unary)* ;
//   unary := "~" unary | "forall" ident "." imp | "exists" ident "." imp | atom ;
//   atom := "top" | "bot" | ident ("(" term ("," term)* ")")? | "(" formula ")" ;
//   term := ident ("(" term ("," term)* ")")?
// Sequent: formula-list "|-" formula-list.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "seqcalc/syntax.hpp"

namespace seqcalc {

struct SourceSpan {
  int line = 1;
  int column = 1;
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span);
  const SourceSpan& span() const { return span_; }
  const std::string& detail() const { return detail_; }

 private:
  SourceSpan span_;
  std::string detail_;
};

Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);
Sequent parse_sequent(std::string_view text);

}  // namespace seqcalc
