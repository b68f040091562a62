#include "kuifje/oracle/oracle.hpp"

#include "kuifje/errors.hpp"

namespace kuifje {

std::string history_key(const std::vector<std::string>& history) {
  std::string out;
  for (const auto& h : history) {
    if (!out.empty()) out += ';';
    out += h;
  }
  return out;
}

namespace {

struct Run {
  std::vector<std::string> history;
  CtxPtr ctx;
  std::vector<Rational> joint;

  bool empty() const {
    for (const auto& w : joint)
      if (w != 0) return false;
    return true;
  }
};

// Pending statements, next one at the back.
using Stack = std::vector<const TNode*>;

void reorder(Run& r, const CtxPtr& target) {
  if (*r.ctx == *target) return;
  auto map = projection_map(*target, *r.ctx);
  std::vector<Rational> out(target->state_count());
  for (std::size_t t = 0; t < out.size(); ++t) out[t] = r.joint[map[t]];
  r.joint = std::move(out);
  r.ctx = target;
}

void push_kernel(Run& r, const Kernel& k) {
  reorder(r, k.src_ptr());
  std::vector<Rational> out(k.dst().state_count());
  for (std::size_t x = 0; x < r.joint.size(); ++x) {
    if (r.joint[x] == 0) continue;
    for (const auto& [y, p] : k.row(x)) out[y] += r.joint[x] * p;
  }
  r.joint = std::move(out);
  r.ctx = k.dst_ptr();
}

std::vector<Run> split_if(const TNode& n, Run r) {
  reorder(r, n.pre);
  Run yes = r, no = r;
  for (std::size_t x = 0; x < r.joint.size(); ++x) {
    Rational g = (*n.guard)[x].value();
    yes.joint[x] = r.joint[x] * g;
    no.joint[x] = r.joint[x] * (1 - g);
  }
  yes.history.push_back("if@" + std::to_string(n.id) + ":then");
  no.history.push_back("if@" + std::to_string(n.id) + ":else");
  return {yes, no};
}

std::vector<Run> split_print(const TNode& n, Run r) {
  reorder(r, n.pre);
  const Kernel& k = *n.kernel;
  std::vector<Run> out;
  for (std::size_t w = 0; w < k.dst().state_count(); ++w) {
    Run o{r.history, n.pre, std::vector<Rational>(r.joint.size())};
    o.history.push_back("print@" + std::to_string(n.id) + "=" + k.dst().state_str(w));
    out.push_back(std::move(o));
  }
  for (std::size_t x = 0; x < r.joint.size(); ++x)
    for (const auto& [w, p] : k.row(x)) out[w].joint[x] = r.joint[x] * p;
  return out;
}

// Advances through statements that do not branch. Returns the branching node
// at the top of the stack, or nullptr when the stack is exhausted.
const TNode* advance(Stack& stack, Run& r) {
  while (!stack.empty()) {
    const TNode* n = stack.back();
    switch (n->kind) {
      case Stmt::Kind::Skip:
      case Stmt::Kind::Call:
        stack.pop_back();
        break;
      case Stmt::Kind::Abort:
        stack.clear();
        r.joint.assign(r.joint.size(), Rational(0));
        return nullptr;
      case Stmt::Kind::Seq:
        stack.pop_back();
        for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) stack.push_back(it->get());
        break;
      case Stmt::Kind::Assign:
      case Stmt::Kind::HidVar:
      case Stmt::Kind::Unvar:
      case Stmt::Kind::Assert:
        stack.pop_back();
        push_kernel(r, *n->kernel);
        break;
      case Stmt::Kind::While:
        throw DomainError("the forward oracle only handles loop-free programs");
      case Stmt::Kind::If:
      case Stmt::Kind::Print:
      case Stmt::Kind::NonDet:
        stack.pop_back();
        return n;
    }
  }
  return nullptr;
}

Stack with_child(const Stack& s, const TNode& n, std::size_t i) {
  Stack out = s;
  out.push_back(n.children[i].get());
  return out;
}

// The observable outcomes of an If or Print, each with the statements still to run.
std::vector<std::pair<Stack, Run>> splits(const Stack& stack, const TNode& n, const Run& r) {
  std::vector<std::pair<Stack, Run>> out;
  if (n.kind == Stmt::Kind::If) {
    auto runs = split_if(n, r);
    for (std::size_t i = 0; i < runs.size(); ++i) out.emplace_back(with_child(stack, n, i), std::move(runs[i]));
  } else {
    for (auto& sub : split_print(n, r)) out.emplace_back(stack, std::move(sub));
  }
  return out;
}

void forward(Stack stack, Run r, const Strategy& s, std::vector<Branch>& out) {
  if (r.empty()) return;
  const TNode* n = advance(stack, r);
  if (r.empty()) return;
  if (!n) {
    Branch b;
    b.history = r.history;
    for (const auto& w : r.joint) b.mass += w;
    std::vector<Rational> post(r.joint.size());
    for (std::size_t x = 0; x < post.size(); ++x) post[x] = r.joint[x] / b.mass;
    b.posterior = Distribution{r.ctx, std::move(post)};
    b.joint = std::move(r.joint);
    out.push_back(std::move(b));
    return;
  }
  if (n->kind == Stmt::Kind::NonDet) {
    auto it = s.find({history_key(r.history), n->site});
    if (it == s.end())
      throw DomainError("strategy undefined at site " + std::to_string(n->site) + " after history '" +
                        history_key(r.history) + "'");
    forward(with_child(stack, *n, it->second ? 1 : 0), std::move(r), s, out);
    return;
  }
  for (auto& [rest, sub] : splits(stack, *n, r)) forward(std::move(rest), std::move(sub), s, out);
}

ExtRat final_risk(const Run& r, const LossFunction& post) {
  Run copy = r;
  reorder(copy, post.ctx_ptr());
  std::optional<ExtRat> best;
  for (const auto& g : post.gens()) {
    ExtRat acc(0);
    for (std::size_t x = 0; x < copy.joint.size(); ++x) acc += ExtRat(copy.joint[x]) * g[x];
    if (!best || acc < *best) best = acc;
  }
  return *best;
}

ExtRat greedy(Stack stack, Run r, const LossFunction& post) {
  if (r.empty()) return ExtRat(0);
  const TNode* n = advance(stack, r);
  if (r.empty()) return ExtRat(0);
  if (!n) return final_risk(r, post);
  if (n->kind == Stmt::Kind::NonDet) {
    ExtRat left = greedy(with_child(stack, *n, 0), r, post);
    ExtRat right = greedy(with_child(stack, *n, 1), std::move(r), post);
    return std::min(left, right);
  }
  ExtRat total(0);
  for (auto& [rest, sub] : splits(stack, *n, r)) total += greedy(std::move(rest), std::move(sub), post);
  return total;
}

std::vector<Strategy> strategies(Stack stack, Run r, std::size_t cap) {
  if (r.empty()) return {Strategy{}};
  const TNode* n = advance(stack, r);
  if (!n || r.empty()) return {Strategy{}};
  std::vector<Strategy> out;
  if (n->kind == Stmt::Kind::NonDet) {
    const auto key = std::make_pair(history_key(r.history), n->site);
    for (int choice = 0; choice < 2; ++choice)
      for (auto& s : strategies(with_child(stack, *n, static_cast<std::size_t>(choice)), r, cap)) {
        s[key] = choice == 1;
        out.push_back(std::move(s));
        if (out.size() > cap) throw DomainError("more than " + std::to_string(cap) + " strategies");
      }
    return out;
  }
  out = {Strategy{}};
  for (auto& [rest, sub] : splits(stack, *n, r)) {
    std::vector<Strategy> part = strategies(std::move(rest), std::move(sub), cap);
    if (out.size() * part.size() > cap) throw DomainError("more than " + std::to_string(cap) + " strategies");
    std::vector<Strategy> next;
    for (const auto& a : out)
      for (const auto& b : part) {
        Strategy m = a;
        m.insert(b.begin(), b.end());
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

Run start(const TypedProgram& p, const Distribution& prior) {
  if (!prior.ctx->same_variables(*p.pre))
    throw ContextMismatch("prior is over [" + prior.ctx->str() + "], program starts in [" + p.pre->str() + "]");
  prior.validate();
  if (prior.mass() != 1) throw DomainError("the prior must be a total distribution");
  Run r{{}, prior.ctx, prior.weights};
  reorder(r, p.pre);
  return r;
}

}  // namespace

std::vector<Branch> run_strategy(const TypedProgram& p, const Distribution& prior, const Strategy& s) {
  std::vector<Branch> out;
  forward({p.root.get()}, start(p, prior), s, out);
  return out;
}

ExtRat branch_risk(const std::vector<Branch>& branches, const LossFunction& post) {
  ExtRat total(0);
  for (const auto& b : branches) total += final_risk(Run{b.history, b.posterior.ctx, b.joint}, post);
  return total;
}

ExtRat min_bayes_risk(const TypedProgram& p, const Distribution& prior, const LossFunction& post) {
  if (!post.ctx().same_variables(*p.post))
    throw ContextMismatch("post loss is over [" + post.ctx().str() + "], program ends in [" + p.post->str() + "]");
  return greedy({p.root.get()}, start(p, prior), post);
}

std::vector<Strategy> enumerate_strategies(const TypedProgram& p, const Distribution& prior, std::size_t cap) {
  return strategies({p.root.get()}, start(p, prior), cap);
}

ExtRat min_bayes_risk_exhaustive(const TypedProgram& p, const Distribution& prior, const LossFunction& post,
                                 std::size_t cap) {
  if (!post.ctx().same_variables(*p.post))
    throw ContextMismatch("post loss is over [" + post.ctx().str() + "], program ends in [" + p.post->str() + "]");
  std::optional<ExtRat> best;
  for (const auto& s : enumerate_strategies(p, prior, cap)) {
    ExtRat r = branch_risk(run_strategy(p, prior, s), post);
    if (!best || r < *best) best = r;
  }
  return *best;
}

}  // namespace kuifje
