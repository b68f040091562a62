#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kuifje/errors.hpp"

namespace kuifje {

enum class Tok {
  Number,
  Ident,
  Keyword,
  Symbol,  // punctuation and operators, normalized to ASCII spelling
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

/// Splits source text into tokens. `//` starts a line comment. Unicode
/// operators are mapped to their ASCII spelling: ¬ → not, ∧ → and,
/// ∨ → or, ≠ → !=, ≤ → <=, ≥ → >=, ⊓ → [].
std::vector<Token> tokenize(std::string_view text);

bool is_keyword(std::string_view word);

}  // namespace kuifje
