#include "kuifje/lang/lexer.hpp"

#include <array>
#include <cctype>

namespace kuifje {

namespace {

constexpr std::array<std::string_view, 30> kKeywords = {
    "skip",  "abort", "hidvar", "var",   "unvar",   "if",     "else",  "while", "print", "assert",
    "call",  "true",  "false",  "not",   "and",     "or",     "xor",   "div",   "mod",   "in",
    "int",   "bool",  "uniform", "context", "shared", "encap", "init", "op",    "final", "client"};

struct Alias {
  std::string_view utf8;
  Tok kind;
  std::string_view text;
};

constexpr std::array<Alias, 7> kUnicode = {{
    {"¬", Tok::Keyword, "not"},
    {"∧", Tok::Keyword, "and"},
    {"∨", Tok::Keyword, "or"},
    {"≠", Tok::Symbol, "!="},
    {"≤", Tok::Symbol, "<="},
    {"≥", Tok::Symbol, ">="},
    {"⊓", Tok::Symbol, "[]"},
}};

struct Spelling {
  std::string_view src;
  Tok kind;
  std::string_view text;
};

// Longest first.
constexpr std::array<Spelling, 30> kSymbols = {{
    {":=", Tok::Symbol, ":="}, {"[]", Tok::Symbol, "[]"}, {"==", Tok::Symbol, "="},  {"!=", Tok::Symbol, "!="},
    {"<=", Tok::Symbol, "<="}, {">=", Tok::Symbol, ">="}, {"..", Tok::Symbol, ".."}, {"&&", Tok::Keyword, "and"},
    {"||", Tok::Keyword, "or"}, {"<>", Tok::Symbol, "!="}, {":", Tok::Symbol, ":"},  {";", Tok::Symbol, ";"},
    {",", Tok::Symbol, ","},   {"(", Tok::Symbol, "("},   {")", Tok::Symbol, ")"},   {"{", Tok::Symbol, "{"},
    {"}", Tok::Symbol, "}"},   {"[", Tok::Symbol, "["},   {"]", Tok::Symbol, "]"},   {"|", Tok::Symbol, "|"},
    {"@", Tok::Symbol, "@"},   {"+", Tok::Symbol, "+"},   {"-", Tok::Symbol, "-"},   {"*", Tok::Symbol, "*"},
    {"/", Tok::Symbol, "/"},   {"%", Tok::Keyword, "mod"}, {"=", Tok::Symbol, "="},  {"<", Tok::Symbol, "<"},
    {">", Tok::Symbol, ">"},   {"!", Tok::Keyword, "not"},
}};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords)
    if (k == word) return true;
  return word == "body";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "//") {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourcePos pos{line, col};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      while (j < text.size() && text[j] == '\'') ++j;
      // primed names like b'2
      if (text[j - 1] == '\'')
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string word(text.substr(i, j - i));
      out.push_back({is_keyword(word) ? Tok::Keyword : Tok::Ident, word, pos});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const auto& a : kUnicode) {
      if (text.substr(i, a.utf8.size()) == a.utf8) {
        out.push_back({a.kind, std::string(a.text), pos});
        advance(a.utf8.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const auto& s : kSymbols) {
      if (text.substr(i, s.src.size()) == s.src) {
        out.push_back({s.kind, std::string(s.text), pos});
        advance(s.src.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;
    throw SyntaxError(pos, "unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

}  // namespace kuifje
