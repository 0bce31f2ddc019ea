// Proof trees as JSON documents.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "seqcalc/calculus.hpp"

namespace seqcalc {

struct ProofDocument {
  Proof proof;
  ProofClass cls;
};

class ProofFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string write_proof_json(const Proof& p, const ProofClass& cls, int indent = 2);

// Throws ProofFormatError on structural problems and ParseError on bad formula text.
ProofDocument read_proof_json(std::string_view text);

}  // namespace seqcalc
