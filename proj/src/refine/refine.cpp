#include "kuifje/refine/refine.hpp"

#include <set>

#include "kuifje/errors.hpp"
#include "kuifje/lang/classify.hpp"
#include "kuifje/lang/printer.hpp"

namespace kuifje {

const char* Verdict::kind_name() const {
  switch (kind) {
    case Kind::Holds: return "Holds";
    case Kind::Fails: return "Fails";
    case Kind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool certify(const Verdict& v) {
  if (!v.fails() || !v.witness_distribution || !v.lhs_pre || !v.rhs_pre) return false;
  const Distribution& w = *v.witness_distribution;
  w.validate();
  ExtRat l = eval_loss(*v.lhs_pre, w);
  ExtRat r = eval_loss(loss_reorder(*v.rhs_pre, v.lhs_pre->ctx_ptr()), w);
  return l == v.lhs && r == v.rhs && r < l;
}

namespace {

Verdict inconclusive(std::string reason) {
  Verdict v;
  v.kind = Verdict::Kind::Inconclusive;
  v.reason = std::move(reason);
  return v;
}

}  // namespace

Verdict program_refines(const TypedProgram& p, const TypedProgram& q, const TestFamily& family,
                        const RefineOptions& opts) {
  if (!p.pre->same_variables(*q.pre) || !p.post->same_variables(*q.post))
    throw ContextMismatch("cannot compare programs of types [" + p.pre->str() + "] -> [" + p.post->str() +
                          "] and [" + q.pre->str() + "] -> [" + q.post->str() + "]");
  if (family.entries.empty()) throw DomainError("empty test family");

  Verdict out;
  std::size_t unsound_holds = 0, unsound_fails = 0;
  for (const auto& entry : family.entries) {
    WplResult rp = wpl_extended(p, entry.loss, opts.extension, opts.wpl);
    WplResult rq = wpl_extended(q, entry.loss, opts.extension, opts.wpl);
    LossFunction rhs = loss_reorder(rq.pre, rp.pre.ctx_ptr());
    RefinementCheck check = loss_refines_certified(rp.pre, rhs);
    ++out.checked;
    if (check.holds) {
      if (rp.truncated()) ++unsound_holds;
      continue;
    }
    if (rq.truncated()) {
      ++unsound_fails;
      continue;
    }
    Verdict v;
    v.kind = Verdict::Kind::Fails;
    v.checked = out.checked;
    v.witness_loss = entry;
    v.witness_distribution = check.witness;
    v.lhs = eval_loss(rp.pre, *check.witness);
    v.rhs = eval_loss(rhs, *check.witness);
    v.lhs_pre = rp.pre;
    v.rhs_pre = rhs;
    if (!certify(v)) throw std::logic_error("refinement witness does not reproduce its gap");
    return v;
  }
  if (unsound_holds || unsound_fails) {
    Verdict v = inconclusive("loop truncation: " + std::to_string(unsound_holds) +
                             " passing check(s) rest on a truncated left side, " + std::to_string(unsound_fails) +
                             " failing check(s) on a truncated right side");
    v.checked = out.checked;
    return v;
  }
  return out;
}

void require_same_signature(const CheckedDatatype& a, const CheckedDatatype& c) {
  if (!a.shared->same_variables(*c.shared))
    throw TypeError({}, "datatypes share different state: [" + a.shared->str() + "] and [" + c.shared->str() + "]");
  std::set<std::string> na, nc;
  for (const auto& [name, t] : a.ops) na.insert(name);
  for (const auto& [name, t] : c.ops) nc.insert(name);
  if (na != nc) throw TypeError({}, "datatypes offer different operations");
}

TypedProgram composite(const ProgramContext& context, const CheckedDatatype& d) {
  Inlined in = inline_context(context, d);
  return typecheck(in.program, in.initial, in.hints);
}

Verdict data_refines(const CheckedDatatype& a, const CheckedDatatype& c, const std::vector<ProgramContext>& contexts,
                     const FamilySpec& family, const RefineOptions& opts) {
  require_same_signature(a, c);
  if (contexts.empty()) throw DomainError("data refinement needs at least one context");
  Verdict total;
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    TypedProgram pa = composite(contexts[i], a);
    TypedProgram pc = composite(contexts[i], c);
    TestFamily f = family.build(pa.post);
    Verdict v = program_refines(pa, pc, f, opts);
    v.where = "context " + std::to_string(i + 1);
    if (!v.holds()) return v;
    total.checked += v.checked;
  }
  return total;
}

namespace {

using Hints = std::map<std::string, std::vector<Value>>;

Hints hints_of(const CheckedDatatype& d) {
  Hints h = d.hints.hints;
  for (const auto& v : d.full->vars()) h[v.name] = v.domain;
  return h;
}

TypedProgram typed(const std::vector<StmtPtr>& parts, const CtxPtr& pre, const Hints& hints) {
  TypecheckOptions o;
  o.hints = hints;
  return typecheck(Stmt::seq(parts, parts.front()->pos), pre, o);
}

const StmtPtr& op_of(const CheckedDatatype& d, const std::string& name) {
  for (const auto& [n, body] : d.source.ops)
    if (n == name) return body;
  throw TypeError({}, "unknown operation '" + name + "'");
}

// rep must map the encapsulated state `from` to `to` without touching shared variables.
void check_rep(const StmtPtr& rep, const CheckedDatatype& from, const CheckedDatatype& to, const Hints& hints) {
  TypecheckOptions o;
  o.hints = hints;
  TypedProgram local;
  try {
    local = typecheck(rep, from.encap, o);
  } catch (const TypeError& e) {
    throw TypeError(e.pos(), "rep can only act on encapsulated state: " + e.message());
  }
  if (!local.post->same_variables(*to.encap))
    throw TypeError(rep->pos, "rep maps [" + from.encap->str() + "] to [" + local.post->str() + "], expected [" +
                                  to.encap->str() + "]");
}

struct SquareSpec {
  std::string name;
  std::vector<StmtPtr> lhs, rhs;
  CtxPtr pre;
};

SimulationReport run_squares(const std::vector<SquareSpec>& specs, const Hints& hints, const FamilySpec& family,
                             const SimulationOptions& opts, std::string gate, bool gate_passed) {
  SimulationReport out;
  out.gate = std::move(gate);
  out.gate_passed = gate_passed;
  std::size_t checked = 0;
  const Verdict* first_bad = nullptr;
  for (const auto& spec : specs) {
    TypedProgram l = typed(spec.lhs, spec.pre, hints);
    TypedProgram r = typed(spec.rhs, spec.pre, hints);
    if (!l.post->same_variables(*r.post))
      throw TypeError({}, spec.name + ": sides end in [" + l.post->str() + "] and [" + r.post->str() + "]");
    TestFamily f = family.build(l.post);
    Square sq;
    sq.name = spec.name;
    sq.lhs = print_inline(*l.root->source);
    sq.rhs = print_inline(*r.root->source);
    sq.verdict = program_refines(l, r, f, opts.refine);
    sq.verdict.where = spec.name;
    if (opts.check_converse) {
      sq.converse = program_refines(r, l, f, opts.refine);
      sq.converse->where = spec.name + " (converse)";
    }
    checked += sq.verdict.checked;
    out.squares.push_back(std::move(sq));
  }
  for (const auto& sq : out.squares)
    if (!sq.verdict.holds() && !first_bad) first_bad = &sq.verdict;

  if (!gate_passed) {
    out.verdict = inconclusive("healthiness: rep not " + out.gate);
  } else if (first_bad) {
    // A failing square refutes the simulation, not the data refinement.
    out.verdict = first_bad->fails() ? inconclusive("square '" + first_bad->where + "' fails") : *first_bad;
    out.verdict.where = first_bad->where;
  } else {
    out.verdict.checked = checked;
  }
  return out;
}

}  // namespace

SimulationReport check_forward_simulation(const CheckedDatatype& a, const CheckedDatatype& c, const StmtPtr& rep,
                                          const FamilySpec& family, const SimulationOptions& opts) {
  require_same_signature(a, c);
  Hints hints = hints_of(a);
  for (const auto& [n, d] : hints_of(c)) hints[n] = d;
  check_rep(rep, a, c, hints);

  std::vector<SquareSpec> specs;
  specs.push_back({"init", {a.source.init, rep}, {c.source.init}, a.shared});
  for (const auto& [name, body] : a.source.ops)
    specs.push_back({"op " + name, {body, rep}, {rep, op_of(c, name)}, a.full});
  specs.push_back({"final", {a.source.final}, {rep, c.source.final}, a.full});
  return run_squares(specs, hints, family, opts, "hidden", classify_hidden(*rep));
}

SimulationReport check_backward_simulation(const CheckedDatatype& a, const CheckedDatatype& c, const StmtPtr& rep,
                                           const FamilySpec& family, const SimulationOptions& opts) {
  require_same_signature(a, c);
  Hints hints = hints_of(c);
  for (const auto& [n, d] : hints_of(a)) hints[n] = d;
  check_rep(rep, c, a, hints);

  std::vector<SquareSpec> specs;
  specs.push_back({"init", {a.source.init}, {c.source.init, rep}, a.shared});
  for (const auto& [name, body] : a.source.ops)
    specs.push_back({"op " + name, {rep, body}, {op_of(c, name), rep}, c.full});
  specs.push_back({"final", {rep, a.source.final}, {c.source.final}, c.full});
  return run_squares(specs, hints, family, opts, "choiceless", classify_choiceless(*rep));
}

}  // namespace kuifje
