#include "kuifje/cli/formats.hpp"

#include <cctype>

#include "kuifje/errors.hpp"
#include "kuifje/lang/parser.hpp"

namespace kuifje {

std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) out += '\n';
      continue;
    }
    out += text[i];
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits "a,[b,c],d" at commas outside brackets.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

struct Assignment {
  std::string state;
  std::string weight;
  int column;
};

// "(0,1)=1/2 (1,1)=inf" → pairs; single-variable states may omit the parentheses.
std::vector<Assignment> split_assignments(std::string_view s, int line, int column0) {
  std::vector<Assignment> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) { throw SyntaxError({line, column0 + static_cast<int>(i)}, msg); };
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    const int col = column0 + static_cast<int>(i);
    std::string state;
    if (s[i] == '(') {
      int depth = 0;
      std::size_t start = i;
      for (; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') --depth;
        if (depth == 0) break;
      }
      if (i >= s.size()) fail("unbalanced parentheses in state");
      state = std::string(s.substr(start + 1, i - start - 1));
      ++i;
    } else {
      std::size_t start = i;
      int depth = 0;
      for (; i < s.size() && (depth > 0 || s[i] != '='); ++i) {
        if (s[i] == '[') ++depth;
        if (s[i] == ']') --depth;
      }
      state = std::string(s.substr(start, i - start));
    }
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size() || s[i] != '=') fail("expected '=' after a state");
    ++i;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected a weight");
    out.push_back({state, std::string(s.substr(start, i - start)), col});
  }
  return out;
}

std::size_t state_index(const VarContext& ctx, const std::string& text, int line, int col) {
  std::vector<std::string> parts = split_top(text);
  if (parts.size() != ctx.size())
    throw SyntaxError({line, col}, "state (" + text + ") has " + std::to_string(parts.size()) + " components, expected " +
                                       std::to_string(ctx.size()));
  std::vector<std::size_t> digits;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Value v = [&] {
      try {
        return parse_value(parts[k]);
      } catch (const SyntaxError& e) {
        throw SyntaxError({line, col}, "bad value '" + parts[k] + "': " + e.message());
      }
    }();
    auto d = ctx.domain_index(k, v);
    if (!d) throw TypeError({line, col}, v.str() + " is not in the domain of " + ctx.var(k).name);
    digits.push_back(*d);
  }
  return ctx.state_of(digits);
}

}  // namespace

LossFunction parse_loss(std::string_view text, const AtomSet& extra_atoms) {
  const std::string clean = strip_comments(text);
  CtxPtr ctx;
  std::vector<Predicate> gens;
  std::size_t pos = 0;
  int line = 0;
  while (pos <= clean.size()) {
    std::size_t end = clean.find('\n', pos);
    if (end == std::string::npos) end = clean.size();
    std::string_view raw(clean.data() + pos, end - pos);
    ++line;
    pos = end + 1;
    std::string l = trim(raw);
    if (l.empty()) continue;
    const int indent = static_cast<int>(raw.find_first_not_of(" \t")) + 1;
    auto starts = [&](const char* kw) { return l.rfind(kw, 0) == 0; };
    if (!ctx) {
      if (!starts("context")) throw SyntaxError({line, indent}, "a loss file starts with 'context DECLS'");
      try {
        ctx = make_ctx(VarContext(parse_decls(l.substr(7))));
      } catch (const SyntaxError& e) {
        throw SyntaxError({line, indent}, e.message());
      }
      continue;
    }
    if (starts("expr:")) {
      try {
        ExprPtr e = parse_expr(l.substr(5));
        gens.push_back(pred_from_expr(ctx, *e, extra_atoms));
      } catch (const SyntaxError& e) {
        throw SyntaxError({line, indent}, e.message());
      } catch (const TypeError& e) {
        throw TypeError({line, indent}, e.message());
      }
    } else if (starts("table:")) {
      std::vector<ExtRat> entries(ctx->state_count(), ExtRat(0));
      for (const auto& a : split_assignments(std::string_view(l).substr(6), line, indent + 6)) {
        std::size_t s = state_index(*ctx, a.state, line, a.column);
        try {
          entries[s] = ExtRat::parse(a.weight);
        } catch (const Error& e) {
          throw SyntaxError({line, a.column}, "bad weight '" + a.weight + "'");
        }
      }
      gens.emplace_back(ctx, std::move(entries));
    } else {
      throw SyntaxError({line, indent}, "expected 'expr:' or 'table:'");
    }
  }
  if (!ctx) throw SyntaxError({1, 1}, "empty loss file");
  if (gens.empty()) throw SyntaxError({line, 1}, "a loss needs at least one generator");
  return LossFunction(ctx, std::move(gens));
}

std::string format_predicate(const Predicate& p) {
  std::string out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x].is_zero()) continue;
    if (!out.empty()) out += ' ';
    out += p.ctx().state_str(x) + "=" + p[x].str();
  }
  return out.empty() ? "0" : out;
}

std::string format_loss(const LossFunction& loss) {
  std::string out = "context " + loss.ctx().str() + "\n";
  for (const auto& g : loss.gens()) {
    std::string body = format_predicate(g);
    out += "table:" + (body == "0" ? std::string() : " " + body) + "\n";
  }
  return out;
}

Distribution parse_prior(std::string_view text, const CtxPtr& ctx) {
  const std::string clean = trim(strip_comments(text));
  if (clean == "uniform") return Distribution::uniform(ctx);
  std::vector<Rational> weights(ctx->state_count(), Rational(0));
  std::string flat = clean;
  for (auto& ch : flat)
    if (ch == '\n' || ch == '\t' || ch == '\r') ch = ' ';
  for (const auto& a : split_assignments(flat, 1, 1)) {
    std::size_t s = state_index(*ctx, a.state, 1, a.column);
    try {
      weights[s] += parse_rational(a.weight);
    } catch (const Error&) {
      throw SyntaxError({1, a.column}, "bad weight '" + a.weight + "'");
    }
  }
  Distribution d{ctx, std::move(weights)};
  d.validate();
  return d;
}

std::string format_distribution(const Distribution& d) {
  std::string out;
  for (std::size_t x = 0; x < d.weights.size(); ++x) {
    if (d.weights[x] == 0) continue;
    if (!out.empty()) out += ' ';
    out += d.ctx->state_str(x) + "=" + to_string(d.weights[x]);
  }
  return out.empty() ? "0" : out;
}

}  // namespace kuifje
