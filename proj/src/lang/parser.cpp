#include "kuifje/lang/parser.hpp"

#include <set>

#include "kuifje/lang/lexer.hpp"

namespace kuifje {

namespace {

bool is_section_word(const std::string& w) {
  return w == "shared" || w == "encap" || w == "init" || w == "op" || w == "final" || w == "client" ||
         w == "body" || w == "context";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  // ---- token helpers
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is(Tok kind, std::string_view text, std::size_t k = 0) const {
    return peek(k).kind == kind && peek(k).text == text;
  }
  bool sym(std::string_view s, std::size_t k = 0) const { return is(Tok::Symbol, s, k); }
  bool kw(std::string_view s, std::size_t k = 0) const { return is(Tok::Keyword, s, k); }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string near = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.pos, what + " near " + near);
  }
  void expect_sym(std::string_view s) {
    if (!sym(s)) fail("expected '" + std::string(s) + "'");
    next();
  }
  void expect_kw(std::string_view s) {
    if (!kw(s)) fail("expected '" + std::string(s) + "'");
    next();
  }
  std::string expect_ident() {
    if (peek().kind != Tok::Ident) fail("expected an identifier");
    return next().text;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  // A section header `word :` or `op NAME :`.
  bool at_section() const {
    if (peek().kind != Tok::Keyword || !is_section_word(peek().text)) return false;
    if (peek().text == "op") return peek(1).kind == Tok::Ident && sym(":", 2);
    if (peek().text == "context") return true;
    return sym(":", 1);
  }

  // ---- values and domains
  Value value() {
    if (sym("-")) {
      next();
      if (peek().kind != Tok::Number) fail("expected a number");
      return Value(Rational(-parse_rational(next().text)));
    }
    if (peek().kind == Tok::Number) return Value(parse_rational(next().text));
    if (kw("true")) return next(), Value(1);
    if (kw("false")) return next(), Value(0);
    if (peek().kind == Tok::Ident) return Value::atom(next().text);
    if (sym("[")) {
      next();
      Value::Array xs;
      if (!sym("]")) {
        xs.push_back(value());
        while (sym(",")) next(), xs.push_back(value());
      }
      expect_sym("]");
      return Value(std::move(xs));
    }
    fail("expected a value");
  }

  std::vector<Value> domain() {
    SourcePos pos = peek().pos;
    std::vector<Value> vals;
    if (kw("bool")) {
      next();
      vals = {Value(0), Value(1)};
    } else if (kw("int")) {
      next();
      Value lo = value();
      expect_sym("..");
      Value hi = value();
      if (!lo.is_number() || !hi.is_number() || denominator(lo.number()) != 1 || denominator(hi.number()) != 1)
        throw SyntaxError(pos, "integer range bounds must be integers");
      if (hi.number() < lo.number()) throw SyntaxError(pos, "empty integer range");
      if (hi.number() - lo.number() > 100000) throw SyntaxError(pos, "integer range too large");
      for (Rational r = lo.number(); r <= hi.number(); r += 1) vals.emplace_back(r);
    } else {
      expect_sym("{");
      vals.push_back(value());
      while (sym(",")) next(), vals.push_back(value());
      expect_sym("}");
    }
    std::set<Value> seen;
    for (const auto& v : vals)
      if (!seen.insert(v).second) throw SyntaxError(pos, "repeated value " + v.str() + " in domain");
    return vals;
  }

  std::vector<Variable> decls() {
    std::vector<Variable> out;
    std::set<std::string> names;
    while (peek().kind == Tok::Ident && sym(":", 1)) {
      SourcePos pos = peek().pos;
      std::string name = next().text;
      next();
      if (!names.insert(name).second) throw SyntaxError(pos, "duplicate declaration of '" + name + "'");
      out.push_back({name, domain()});
      if (sym(",") && peek(1).kind == Tok::Ident && sym(":", 2)) next();
    }
    return out;
  }

  // ---- expressions
  ExprPtr expr() { return or_expr(); }

  ExprPtr or_expr() {
    ExprPtr a = xor_expr();
    while (kw("or")) {
      SourcePos pos = next().pos;
      a = Expr::make_binary("or", a, xor_expr(), pos);
    }
    return a;
  }
  ExprPtr xor_expr() {
    ExprPtr a = and_expr();
    while (kw("xor")) {
      SourcePos pos = next().pos;
      a = Expr::make_binary("xor", a, and_expr(), pos);
    }
    return a;
  }
  ExprPtr and_expr() {
    ExprPtr a = not_expr();
    while (kw("and")) {
      SourcePos pos = next().pos;
      a = Expr::make_binary("and", a, not_expr(), pos);
    }
    return a;
  }
  ExprPtr not_expr() {
    if (kw("not")) {
      SourcePos pos = next().pos;
      return Expr::make_unary("not", not_expr(), pos);
    }
    return cmp_expr();
  }
  ExprPtr cmp_expr() {
    ExprPtr a = add_expr();
    static const std::set<std::string> ops = {"=", "!=", "<", "<=", ">", ">="};
    if ((peek().kind == Tok::Symbol && ops.count(peek().text)) || kw("in")) {
      const Token& t = next();
      return Expr::make_binary(t.text, a, add_expr(), t.pos);
    }
    return a;
  }
  ExprPtr add_expr() {
    ExprPtr a = mul_expr();
    while (sym("+") || sym("-")) {
      const Token& t = next();
      a = Expr::make_binary(t.text, a, mul_expr(), t.pos);
    }
    return a;
  }
  ExprPtr mul_expr() {
    ExprPtr a = unary_expr();
    while (sym("*") || sym("/") || kw("div") || kw("mod")) {
      const Token& t = next();
      a = Expr::make_binary(t.text, a, unary_expr(), t.pos);
    }
    return a;
  }
  ExprPtr unary_expr() {
    if (sym("-")) {
      SourcePos pos = next().pos;
      return Expr::make_unary("-", unary_expr(), pos);
    }
    return postfix_expr();
  }
  ExprPtr postfix_expr() {
    ExprPtr a = primary();
    while (sym("[")) {
      SourcePos pos = next().pos;
      ExprPtr idx = expr();
      expect_sym("]");
      a = Expr::make_index(a, idx, pos);
    }
    return a;
  }
  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      return Expr::make_number(parse_rational(t.text), t.pos);
    }
    if (kw("true") || kw("false")) {
      next();
      return Expr::make_number(Rational(t.text == "true" ? 1 : 0), t.pos);
    }
    if (t.kind == Tok::Ident) {
      next();
      if (sym("(")) {
        next();
        std::vector<ExprPtr> args;
        if (!sym(")")) {
          args.push_back(expr());
          while (sym(",")) next(), args.push_back(expr());
        }
        expect_sym(")");
        return Expr::make_call(t.text, std::move(args), t.pos);
      }
      return Expr::make_name(t.text, t.pos);
    }
    if (sym("(")) {
      next();
      std::vector<ExprPtr> items{expr()};
      while (sym(",")) next(), items.push_back(expr());
      expect_sym(")");
      if (items.size() == 1) return items.front();
      return Expr::make_tuple(std::move(items), t.pos);
    }
    if (sym("[")) {
      next();
      std::vector<ExprPtr> items;
      if (!sym("]")) {
        items.push_back(expr());
        while (sym(",")) next(), items.push_back(expr());
      }
      expect_sym("]");
      return Expr::make_array(std::move(items), t.pos);
    }
    fail("expected an expression");
  }

  // ---- distributions
  Rational weight() {
    if (peek().kind != Tok::Number) fail("expected a weight");
    Rational w = parse_rational(next().text);
    if (sym("/")) {
      next();
      if (peek().kind != Tok::Number) fail("expected a denominator");
      Rational d = parse_rational(next().text);
      if (d == 0) fail("zero denominator");
      w /= d;
    }
    return w;
  }

  DistExpr dist() {
    SourcePos pos = peek().pos;
    DistExpr d;
    if (kw("uniform")) {
      next();
      expect_sym("(");
      std::vector<ExprPtr> items{expr()};
      while (sym(",")) next(), items.push_back(expr());
      expect_sym(")");
      Rational w(1, static_cast<long>(items.size()));
      for (auto& e : items) d.branches.push_back({e, w});
      return d;
    }
    std::vector<std::pair<ExprPtr, std::optional<Rational>>> raw;
    for (;;) {
      ExprPtr e = expr();
      std::optional<Rational> w;
      if (sym("@")) {
        next();
        w = weight();
      }
      raw.emplace_back(e, w);
      if (!sym("|")) break;
      next();
    }
    Rational total = 0;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      auto& [e, w] = raw[k];
      if (!w) {
        if (k + 1 != raw.size()) throw SyntaxError(e->pos, "missing weight on a non-final branch");
        w = Rational(1) - total;
        if (*w <= 0) throw SyntaxError(e->pos, "no probability left for the final branch");
      }
      if (*w <= 0) throw SyntaxError(e->pos, "branch weights must be positive");
      total += *w;
      d.branches.push_back({e, *w});
    }
    if (total > 1) throw SyntaxError(pos, "branch weights sum to " + total.str() + " > 1");
    return d;
  }

  DistExpr grouped_dist() {
    if (sym("{")) {
      next();
      DistExpr d = dist();
      expect_sym("}");
      return d;
    }
    return dist();
  }

  bool at_stmt_end() const {
    return sym(";") || sym("}") || sym(")") || sym("[]") || kw("else") || at_end() || at_section();
  }

  // `d1 [] d2 [] ...` in expression position; stops before a `[]` that
  // introduces a statement instead.
  std::vector<DistExpr> nondet_dists() {
    std::vector<DistExpr> out{grouped_dist()};
    while (sym("[]")) {
      std::size_t save = i_;
      next();
      try {
        DistExpr d = grouped_dist();
        if (!at_stmt_end()) throw SyntaxError(peek().pos, "not an expression");
        out.push_back(std::move(d));
      } catch (const SyntaxError&) {
        i_ = save;
        break;
      }
    }
    return out;
  }

  template <class Make>
  StmtPtr fold_nondet(const std::vector<DistExpr>& ds, SourcePos pos, Make make) {
    StmtPtr s = make(ds[0]);
    for (std::size_t k = 1; k < ds.size(); ++k) s = Stmt::nondet(s, make(ds[k]), pos);
    return s;
  }

  // ---- statements
  StmtPtr program() {
    SourcePos pos = peek().pos;
    std::vector<StmtPtr> items;
    if (sym("}") || sym(")") || at_end() || at_section()) return Stmt::skip(pos);
    items.push_back(stmt());
    while (sym(";")) {
      next();
      if (sym("}") || sym(")") || at_end() || at_section()) break;
      items.push_back(stmt());
    }
    return Stmt::seq(std::move(items), pos);
  }

  StmtPtr block() {
    expect_sym("{");
    StmtPtr p = program();
    expect_sym("}");
    return p;
  }

  StmtPtr stmt() {
    SourcePos pos = peek().pos;
    StmtPtr s = simple_stmt();
    while (sym("[]")) {
      next();
      s = Stmt::nondet(s, simple_stmt(), pos);
    }
    return s;
  }

  StmtPtr simple_stmt() {
    const Token& t = peek();
    SourcePos pos = t.pos;
    if (kw("skip")) return next(), Stmt::skip(pos);
    if (kw("abort")) return next(), Stmt::abort(pos);
    if (kw("hidvar") || kw("var")) {
      next();
      std::string name = expect_ident();
      std::optional<std::vector<Value>> dom;
      if (sym(":")) {
        next();
        dom = domain();
      }
      expect_sym(":=");
      auto ds = nondet_dists();
      return fold_nondet(ds, pos, [&](const DistExpr& d) { return Stmt::hidvar(name, dom, d, pos); });
    }
    if (kw("unvar")) {
      next();
      return Stmt::unvar(expect_ident(), pos);
    }
    if (kw("if")) return if_stmt();
    if (kw("while")) {
      next();
      ExprPtr g = expr();
      return Stmt::while_(g, block(), pos);
    }
    if (kw("print")) {
      next();
      auto ds = nondet_dists();
      return fold_nondet(ds, pos, [&](const DistExpr& d) { return Stmt::print(d, pos); });
    }
    if (kw("assert")) {
      next();
      return Stmt::assert_(expr(), pos);
    }
    if (kw("call")) {
      next();
      return Stmt::call(expect_ident(), pos);
    }
    if (sym("{")) return block();
    if (sym("(")) {
      next();
      StmtPtr p = program();
      expect_sym(")");
      return p;
    }
    if (t.kind == Tok::Ident) {
      std::vector<std::string> targets{next().text};
      while (sym(",")) {
        next();
        targets.push_back(expect_ident());
      }
      std::set<std::string> uniq(targets.begin(), targets.end());
      if (uniq.size() != targets.size()) throw SyntaxError(pos, "repeated assignment target");
      expect_sym(":=");
      auto ds = nondet_dists();
      return fold_nondet(ds, pos, [&](const DistExpr& d) { return Stmt::assign(targets, d, pos); });
    }
    fail("expected a statement");
  }

  StmtPtr if_stmt() {
    SourcePos pos = next().pos;
    ExprPtr g = expr();
    StmtPtr then = block();
    StmtPtr otherwise = Stmt::skip(pos);
    if (kw("else")) {
      next();
      otherwise = kw("if") ? if_stmt() : block();
    }
    return Stmt::if_(g, then, otherwise, pos);
  }

  // ---- files
  ProgramFile program_file() {
    ProgramFile f;
    if (kw("context")) {
      next();
      if (sym(":")) next();
      f.context = decls();
      if (sym(";")) next();
    }
    f.body = program();
    expect_end();
    return f;
  }

  Datatype datatype() {
    Datatype d;
    bool have_shared = false, have_init = false, have_final = false;
    std::set<std::string> op_names;
    while (!at_end()) {
      if (!at_section()) fail("expected a section header");
      const Token& t = next();
      if (t.text == "op") {
        std::string name = next().text;
        next();
        if (!op_names.insert(name).second) throw SyntaxError(t.pos, "duplicate operation '" + name + "'");
        d.ops.emplace_back(name, program());
        continue;
      }
      next();  // ':'
      if (t.text == "shared") {
        if (have_shared) throw SyntaxError(t.pos, "duplicate section 'shared'");
        have_shared = true;
        d.shared = decls();
      } else if (t.text == "encap") {
        if (d.encap) throw SyntaxError(t.pos, "duplicate section 'encap'");
        d.encap = decls();
      } else if (t.text == "init") {
        if (have_init) throw SyntaxError(t.pos, "duplicate section 'init'");
        have_init = true;
        d.init = program();
      } else if (t.text == "final") {
        if (have_final) throw SyntaxError(t.pos, "duplicate section 'final'");
        have_final = true;
        d.final = program();
      } else {
        throw SyntaxError(t.pos, "section '" + t.text + "' does not belong in a datatype");
      }
    }
    if (d.ops.empty()) throw SyntaxError(peek().pos, "a datatype needs at least one 'op' section");
    if (!d.init) d.init = Stmt::skip();
    if (!d.final) d.final = Stmt::skip();
    return d;
  }

  ProgramContext context() {
    ProgramContext c;
    bool have_client = false;
    while (!at_end()) {
      if (!at_section()) fail("expected a section header");
      const Token& t = next();
      if (t.text == "op" || t.text == "context") throw SyntaxError(t.pos, "section '" + t.text + "' does not belong in a context");
      next();
      if (t.text == "shared") {
        if (c.shared) throw SyntaxError(t.pos, "duplicate section 'shared'");
        c.shared = decls();
      } else if (t.text == "client") {
        if (have_client) throw SyntaxError(t.pos, "duplicate section 'client'");
        have_client = true;
        c.client = decls();
      } else if (t.text == "body") {
        if (c.body) throw SyntaxError(t.pos, "duplicate section 'body'");
        c.body = program();
      } else {
        throw SyntaxError(t.pos, "section '" + t.text + "' does not belong in a context");
      }
    }
    if (!c.body) throw SyntaxError(peek().pos, "a context needs a 'body' section");
    return c;
  }

  bool looks_like_context() const {
    for (std::size_t k = 0; k + 1 < toks_.size(); ++k)
      if (toks_[k].kind == Tok::Keyword && (toks_[k].text == "client" || toks_[k].text == "body") &&
          toks_[k + 1].kind == Tok::Symbol && toks_[k + 1].text == ":")
        return true;
    return false;
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

StmtPtr parse_program(std::string_view text) {
  Parser p(text);
  StmtPtr s = p.program();
  p.expect_end();
  return s;
}

ProgramFile parse_program_file(std::string_view text) { return Parser(text).program_file(); }

Datatype parse_datatype(std::string_view text) { return Parser(text).datatype(); }

ProgramContext parse_context(std::string_view text) { return Parser(text).context(); }

ParsedFile parse_any(std::string_view text) {
  Parser p(text);
  if (p.looks_like_context()) return p.context();
  if (p.at_section() && !p.kw("context")) return p.datatype();
  return p.program_file();
}

ExprPtr parse_expr(std::string_view text) {
  Parser p(text);
  ExprPtr e = p.expr();
  p.expect_end();
  return e;
}

DistExpr parse_dist(std::string_view text) {
  Parser p(text);
  DistExpr d = p.dist();
  p.expect_end();
  return d;
}

std::vector<Variable> parse_decls(std::string_view text) {
  Parser p(text);
  auto d = p.decls();
  p.expect_end();
  return d;
}

std::vector<Value> parse_domain(std::string_view text) {
  Parser p(text);
  auto d = p.domain();
  p.expect_end();
  return d;
}

Value parse_value(std::string_view text) {
  Parser p(text);
  Value v = p.value();
  p.expect_end();
  return v;
}

}  // namespace kuifje
