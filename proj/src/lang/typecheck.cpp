#include "kuifje/lang/typecheck.hpp"

#include <algorithm>
#include <set>

namespace kuifje {

namespace {

struct Widen {};

using Outcomes = std::vector<std::pair<Value, Rational>>;

void collect_atoms(const Stmt& s, AtomSet& atoms) {
  if (s.domain)
    for (const auto& v : *s.domain) add_atoms(atoms, v);
  for (const auto& c : s.body) collect_atoms(*c, atoms);
}

class Checker {
 public:
  Checker(TypecheckOptions opts, std::set<std::string> widened, AtomSet atoms)
      : opts_(std::move(opts)), widened_(std::move(widened)), atoms_(std::move(atoms)) {}

  std::shared_ptr<TNode> check(const StmtPtr& s, const CtxPtr& pre) {
    auto n = std::make_shared<TNode>();
    n->kind = s->kind;
    n->pre = pre;
    n->post = pre;
    n->source = s;
    n->id = nodes_++;
    switch (s->kind) {
      case Stmt::Kind::Skip:
      case Stmt::Kind::Abort:
        break;
      case Stmt::Kind::Seq: {
        CtxPtr cur = pre;
        for (const auto& item : s->body) {
          auto c = check(item, cur);
          cur = c->post;
          n->children.push_back(c);
        }
        n->post = cur;
        break;
      }
      case Stmt::Kind::Assign:
        n->kernel = assign_kernel(*s, pre);
        break;
      case Stmt::Kind::HidVar:
        hidvar(*s, *n);
        break;
      case Stmt::Kind::Unvar: {
        const std::string& name = s->names[0];
        if (!pre->has(name)) throw TypeError(s->pos, "unvar of undeclared variable '" + name + "'");
        n->post = make_ctx(pre->without(name));
        n->kernel = Kernel::projection(pre, n->post);
        break;
      }
      case Stmt::Kind::If: {
        n->guard = guard(*s->guard, pre);
        auto a = check(s->body[0], pre);
        auto b = check(s->body[1], pre);
        n->post = join(a, b, s->pos);
        n->children = {a, b};
        break;
      }
      case Stmt::Kind::While: {
        n->site = loops_++;
        n->guard = guard(*s->guard, pre);
        auto body = check(s->body[0], pre);
        if (!body->post->same_variables(*pre)) {
          maybe_widen(*pre, *body->post);
          throw TypeError(s->pos, "loop body changes the context from [" + pre->str() + "] to [" +
                                      body->post->str() + "]");
        }
        n->children = {body};
        break;
      }
      case Stmt::Kind::Print:
        n->kernel = print_kernel(*s, pre);
        break;
      case Stmt::Kind::NonDet: {
        n->site = sites_++;
        auto a = check(s->body[0], pre);
        auto b = check(s->body[1], pre);
        n->post = join(a, b, s->pos);
        n->children = {a, b};
        break;
      }
      case Stmt::Kind::Assert:
        n->kernel = Kernel::scaling(guard(*s->guard, pre));
        break;
      case Stmt::Kind::Call:
        if (!opts_.calls_as_skip) throw TypeError(s->pos, "unresolved call to operation '" + s->names[0] + "'");
        break;
    }
    return n;
  }

  int nodes() const { return nodes_; }
  int sites() const { return sites_; }
  int loops() const { return loops_; }
  const TypecheckOptions& options() const { return opts_; }
  const std::set<std::string>& widened() const { return widened_; }
  const AtomSet& atoms() const { return atoms_; }

 private:
  Outcomes outcomes(const DistExpr& d, const VarContext& ctx, std::size_t state) {
    Env env{ctx, state, atoms_};
    Outcomes out;
    for (const auto& b : d.branches) out.emplace_back(eval_expr(*b.expr, env), b.weight);
    return out;
  }

  Predicate guard(const Expr& g, const CtxPtr& ctx) {
    return Predicate::from(ctx, [&](std::size_t s) { return ExtRat(eval_guard(g, Env{*ctx, s, atoms_})); });
  }

  Kernel assign_kernel(const Stmt& s, const CtxPtr& ctx) {
    std::vector<std::size_t> targets;
    for (const auto& t : s.names) {
      auto i = ctx->index_of(t);
      if (!i) throw TypeError(s.pos, "assignment to undeclared variable '" + t + "'");
      targets.push_back(*i);
    }
    std::vector<Kernel::Row> rows(ctx->state_count());
    for (std::size_t x = 0; x < rows.size(); ++x) {
      for (const auto& [v, w] : outcomes(s.dist, *ctx, x)) {
        std::vector<Value> parts;
        if (targets.size() == 1) {
          parts = {v};
        } else {
          if (!v.is_array() || v.array().size() != targets.size())
            throw TypeError(s.pos, "expected a " + std::to_string(targets.size()) + "-tuple, got " + v.str());
          parts = v.array();
        }
        std::size_t y = x;
        bool in_range = true;
        for (std::size_t k = 0; k < targets.size() && in_range; ++k) {
          auto d = ctx->domain_index(targets[k], parts[k]);
          if (!d)
            in_range = false;  // outside the declared domain: this mass aborts
          else
            y = ctx->with_digit(y, targets[k], *d);
        }
        if (in_range) rows[x].emplace_back(y, w);
      }
    }
    return Kernel(ctx, ctx, std::move(rows));
  }

  void hidvar(const Stmt& s, TNode& n) {
    const std::string& name = s.names[0];
    const CtxPtr& pre = n.pre;
    if (pre->has(name)) throw TypeError(s.pos, "'" + name + "' is already declared");
    std::vector<Outcomes> all(pre->state_count());
    for (std::size_t x = 0; x < all.size(); ++x) all[x] = outcomes(s.dist, *pre, x);

    std::vector<Value> domain;
    if (s.domain) {
      domain = *s.domain;
    } else if (auto h = opts_.hints.find(name); h != opts_.hints.end()) {
      domain = h->second;
    } else {
      std::set<Value> seen;
      for (const auto& o : all)
        for (const auto& [v, w] : o) seen.insert(v);
      domain.assign(seen.begin(), seen.end());
      widened_.insert(name);
    }
    n.post = make_ctx(pre->appended({name, domain}));
    const std::size_t last = n.post->size() - 1;
    const std::size_t width = domain.size();
    std::vector<Kernel::Row> rows(all.size());
    for (std::size_t x = 0; x < all.size(); ++x)
      for (const auto& [v, w] : all[x])
        if (auto d = n.post->domain_index(last, v)) rows[x].emplace_back(x * width + *d, w);
    n.kernel = Kernel(pre, n.post, std::move(rows));
  }

  Kernel print_kernel(const Stmt& s, const CtxPtr& ctx) {
    std::vector<Outcomes> all(ctx->state_count());
    std::set<Value> seen;
    for (std::size_t x = 0; x < all.size(); ++x) {
      all[x] = outcomes(s.dist, *ctx, x);
      for (const auto& [v, w] : all[x]) seen.insert(v);
    }
    auto obs = make_ctx(VarContext({{kObservationVar, std::vector<Value>(seen.begin(), seen.end())}}));
    std::vector<Kernel::Row> rows(all.size());
    for (std::size_t x = 0; x < all.size(); ++x)
      for (const auto& [v, w] : all[x]) rows[x].emplace_back(*obs->domain_index(0, v), w);
    return Kernel(ctx, obs, std::move(rows));
  }

  // Raises Widen when a and b differ only in domains of widenable variables.
  void maybe_widen(const VarContext& a, const VarContext& b) {
    if (a.size() != b.size()) return;
    std::map<std::string, std::vector<Value>> updates;
    for (const auto& v : a.vars()) {
      auto j = b.index_of(v.name);
      if (!j) return;
      const auto& other = b.var(*j).domain;
      if (other == v.domain) continue;
      if (!widened_.count(v.name)) return;
      std::set<Value> u(v.domain.begin(), v.domain.end());
      u.insert(other.begin(), other.end());
      updates[v.name].assign(u.begin(), u.end());
    }
    if (updates.empty()) return;
    for (auto& [name, dom] : updates) opts_.hints[name] = std::move(dom);
    throw Widen{};
  }

  CtxPtr join(std::shared_ptr<TNode>& a, std::shared_ptr<TNode>& b, SourcePos pos) {
    if (*a->post == *b->post || a->post->same_variables(*b->post)) return a->post;
    if (a->kind == Stmt::Kind::Abort) {
      a->post = b->post;
      return b->post;
    }
    if (b->kind == Stmt::Kind::Abort) {
      b->post = a->post;
      return a->post;
    }
    maybe_widen(*a->post, *b->post);
    throw TypeError(pos, "branches end in different contexts [" + a->post->str() + "] and [" + b->post->str() + "]");
  }

  TypecheckOptions opts_;
  std::set<std::string> widened_;
  AtomSet atoms_;
  int nodes_ = 0, sites_ = 0, loops_ = 0;
};

}  // namespace

TypedProgram typecheck(const StmtPtr& p, const CtxPtr& initial, const TypecheckOptions& opts) {
  AtomSet atoms = atoms_of(*initial);
  collect_atoms(*p, atoms);
  for (const auto& [name, dom] : opts.hints)
    for (const auto& v : dom) add_atoms(atoms, v);

  TypecheckOptions current = opts;
  std::set<std::string> widened;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Checker c(current, widened, atoms);
    try {
      auto root = c.check(p, initial);
      TypedProgram out;
      out.root = root;
      out.pre = initial;
      out.post = root->post;
      out.node_count = c.nodes();
      out.nondet_sites = c.sites();
      out.loop_sites = c.loops();
      out.atoms = atoms;
      return out;
    } catch (const Widen&) {
      // Names inferred so far stay widenable under their new hints.
      for (const auto& [name, dom] : c.options().hints)
        if (!opts.hints.count(name)) widened.insert(name);
      current = c.options();
    }
  }
  throw TypeError(p->pos, "could not reconcile inferred variable domains");
}

}  // namespace kuifje
