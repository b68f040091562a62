#include "kuifje/lang/datatype.hpp"

#include <algorithm>
#include <set>

namespace kuifje {

namespace {

std::string rn(const std::string& name, const std::map<std::string, std::string>& m) {
  auto it = m.find(name);
  return it == m.end() ? name : it->second;
}

void collect_calls(const Stmt& s, std::vector<const Stmt*>& out) {
  if (s.kind == Stmt::Kind::Call) out.push_back(&s);
  for (const auto& c : s.body) collect_calls(*c, out);
}

StmtPtr substitute_calls(const StmtPtr& s, const std::map<std::string, StmtPtr>& ops) {
  if (s->kind == Stmt::Kind::Call) {
    auto it = ops.find(s->names[0]);
    if (it == ops.end()) throw TypeError(s->pos, "unknown operation '" + s->names[0] + "'");
    return it->second;
  }
  if (s->body.empty()) return s;
  auto copy = std::make_shared<Stmt>(*s);
  for (auto& c : copy->body) c = substitute_calls(c, ops);
  if (copy->kind == Stmt::Kind::Seq) return Stmt::seq(copy->body, copy->pos);
  return copy;
}

}  // namespace

ExprPtr rename_expr(const ExprPtr& e, const std::map<std::string, std::string>& m) {
  if (e->kind == Expr::Kind::Name) {
    auto it = m.find(e->op);
    return it == m.end() ? e : Expr::make_name(it->second, e->pos);
  }
  if (e->args.empty()) return e;
  auto copy = std::make_shared<Expr>(*e);
  for (auto& a : copy->args) a = rename_expr(a, m);
  return copy;
}

StmtPtr rename_stmt(const StmtPtr& s, const std::map<std::string, std::string>& m) {
  auto copy = std::make_shared<Stmt>(*s);
  if (s->kind != Stmt::Kind::Call)
    for (auto& n : copy->names) n = rn(n, m);
  for (auto& b : copy->dist.branches) b.expr = rename_expr(b.expr, m);
  if (copy->guard) copy->guard = rename_expr(copy->guard, m);
  for (auto& c : copy->body) c = rename_stmt(c, m);
  return copy;
}

std::vector<std::string> declared_names(const Stmt& s) {
  std::vector<std::string> out;
  if (s.kind == Stmt::Kind::HidVar) out.push_back(s.names[0]);
  for (const auto& c : s.body)
    for (auto& n : declared_names(*c))
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  return out;
}

CheckedDatatype check_datatype(const Datatype& d) {
  CheckedDatatype out;
  out.source = d;
  out.shared = make_ctx(VarContext(d.shared));
  if (d.encap)
    for (const auto& v : *d.encap) {
      if (out.shared->has(v.name)) throw TypeError(d.init->pos, "'" + v.name + "' is both shared and encapsulated");
      out.hints.hints[v.name] = v.domain;
    }

  out.init = typecheck(d.init, out.shared, out.hints);
  out.full = out.init.post;
  if (!out.full->contains(*out.shared))
    throw TypeError(d.init->pos, "initialisation must keep the shared state [" + out.shared->str() + "]");
  std::vector<Variable> encap;
  for (const auto& v : out.full->vars())
    if (!out.shared->has(v.name)) encap.push_back(v);
  out.encap = make_ctx(VarContext(encap));
  if (d.encap && !out.encap->same_variables(VarContext(*d.encap)))
    throw TypeError(d.init->pos, "initialisation produces encapsulated state [" + out.encap->str() +
                                     "] but [" + VarContext(*d.encap).str() + "] is declared");

  for (const auto& [name, body] : d.ops) {
    TypedProgram t = typecheck(body, out.full, out.hints);
    if (!t.post->same_variables(*out.full))
      throw TypeError(body->pos, "operation '" + name + "' maps [" + out.full->str() + "] to [" + t.post->str() + "]");
    out.ops.emplace_back(name, std::move(t));
  }
  out.final = typecheck(d.final, out.full, out.hints);
  if (!out.final.post->same_variables(*out.shared))
    throw TypeError(d.final->pos, "finalisation must end in the shared state [" + out.shared->str() + "], not [" +
                                      out.final.post->str() + "]");
  return out;
}

namespace {

CtxPtr client_context(const ProgramContext& c, const CheckedDatatype& d) {
  if (c.shared && !VarContext(*c.shared).same_variables(*d.shared))
    throw TypeError(c.body->pos, "context shared state [" + VarContext(*c.shared).str() +
                                     "] does not match the datatype's [" + d.shared->str() + "]");
  for (const auto& v : c.client)
    if (d.shared->has(v.name)) throw TypeError(c.body->pos, "client variable '" + v.name + "' is shared state");
  return make_ctx(d.shared->concat(VarContext(c.client)));
}

}  // namespace

TypedProgram check_context(const ProgramContext& c, const CheckedDatatype& d) {
  CtxPtr initial = client_context(c, d);
  std::vector<const Stmt*> calls;
  collect_calls(*c.body, calls);
  for (const Stmt* call : calls)
    if (!d.source.op(call->names[0])) throw TypeError(call->pos, "unknown operation '" + call->names[0] + "'");
  TypecheckOptions opts;
  opts.calls_as_skip = true;
  TypedProgram t = typecheck(c.body, initial, opts);
  if (!t.post->same_variables(*initial))
    throw TypeError(c.body->pos, "context must end in its initial state space [" + initial->str() + "], not [" +
                                     t.post->str() + "]");
  return t;
}

Inlined inline_context(const ProgramContext& c, const CheckedDatatype& d) {
  check_context(c, d);
  Inlined out;
  out.initial = client_context(c, d);

  std::set<std::string> client;
  for (const auto& v : c.client) client.insert(v.name);
  for (const auto& n : declared_names(*c.body)) client.insert(n);

  std::set<std::string> mine;
  for (const auto& v : d.encap->vars()) mine.insert(v.name);
  for (const auto& n : declared_names(*d.source.init)) mine.insert(n);
  for (const auto& [name, body] : d.source.ops)
    for (const auto& n : declared_names(*body)) mine.insert(n);
  for (const auto& n : declared_names(*d.source.final)) mine.insert(n);
  for (const auto& v : d.shared->vars()) mine.erase(v.name);

  std::set<std::string> used = client;
  used.insert(mine.begin(), mine.end());
  for (const auto& v : d.shared->vars()) used.insert(v.name);

  for (const auto& name : mine) {
    if (!client.count(name)) continue;
    std::string fresh = name + "'";
    for (int k = 2; used.count(fresh); ++k) {
      if (k > 100) throw TypeError(c.body->pos, "cannot find a fresh name for '" + name + "'");
      fresh = name + "'" + std::to_string(k);
    }
    used.insert(fresh);
    out.renamed[name] = fresh;
  }

  std::map<std::string, StmtPtr> ops;
  for (const auto& [name, body] : d.source.ops) ops[name] = rename_stmt(body, out.renamed);
  for (const auto& [name, dom] : d.hints.hints) out.hints.hints[rn(name, out.renamed)] = dom;

  out.program = Stmt::seq({rename_stmt(d.source.init, out.renamed), substitute_calls(c.body, ops),
                           rename_stmt(d.source.final, out.renamed)},
                          c.body->pos);
  return out;
}

}  // namespace kuifje
