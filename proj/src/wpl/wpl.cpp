#include "kuifje/wpl/wpl.hpp"

#include <cstdlib>
#include <set>

#include "kuifje/errors.hpp"

namespace kuifje {

std::string LoopStatus::str() const {
  return converged ? "Converged(" + std::to_string(terms) + ")" : "Truncated(" + std::to_string(terms) + ")";
}

bool WplResult::truncated() const {
  for (const auto& l : loops)
    if (!l.converged) return true;
  return false;
}

int default_loop_budget() {
  if (const char* env = std::getenv("KUIFJE_LOOP_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1000000) return static_cast<int>(v);
  }
  return 64;
}

namespace {

void collect_names(const TNode& n, std::set<std::string>& out) {
  for (const auto& v : n.pre->vars()) out.insert(v.name);
  for (const auto& v : n.post->vars()) out.insert(v.name);
  for (const auto& c : n.children) collect_names(*c, out);
}

class Evaluator {
 public:
  Evaluator(const TypedProgram& p, VarContext ext, const WplOptions& opts)
      : ext_(make_ctx(std::move(ext))), opts_(opts), pre_(p.node_count), post_(p.node_count),
        kernels_(p.node_count), loops_(p.loop_sites) {}

  LossFunction run(const TNode& n, LossFunction e) {
    e = loss_reorder(e, post_ctx(n));
    switch (n.kind) {
      case Stmt::Kind::Skip:
      case Stmt::Kind::Call:
        return e;
      case Stmt::Kind::Abort:
        return LossFunction::zero(pre_ctx(n));
      case Stmt::Kind::Seq:
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) e = run(**it, std::move(e));
        return e;
      case Stmt::Kind::Assign:
      case Stmt::Kind::HidVar:
      case Stmt::Kind::Unvar:
      case Stmt::Kind::Assert:
        return loss_map(kernel(n), e);
      case Stmt::Kind::If: {
        auto [g, ng] = guards(n);
        return loss_add(loss_conj(g, run(*n.children[0], e)), loss_conj(ng, run(*n.children[1], e)));
      }
      case Stmt::Kind::While:
        return loop(n, e);
      case Stmt::Kind::Print:
        return print(n, e);
      case Stmt::Kind::NonDet:
        return loss_min(run(*n.children[0], e), run(*n.children[1], e));
    }
    throw std::logic_error("unknown statement kind");
  }

  std::vector<LoopStatus> statuses() const { return loops_; }
  std::vector<LossFunction> partials() const { return partials_; }
  const CtxPtr& pre_ctx(const TNode& n) { return extended(pre_[n.id], n.pre); }

 private:
  const CtxPtr& post_ctx(const TNode& n) { return extended(post_[n.id], n.post); }

  const CtxPtr& extended(CtxPtr& slot, const CtxPtr& base) {
    if (!slot) slot = ext_->size() == 0 ? base : make_ctx(base->concat(*ext_));
    return slot;
  }

  const Kernel& kernel(const TNode& n) {
    auto& k = kernels_[n.id];
    if (!k) k = ext_->size() == 0 ? *n.kernel : kernel_tensor(*n.kernel, Kernel::identity(ext_));
    return *k;
  }

  Predicate lift(const Predicate& p) { return ext_->size() == 0 ? p : pred_extend(p, *ext_); }

  std::pair<Predicate, Predicate> guards(const TNode& n) {
    return {lift(*n.guard), lift(pred_complement(*n.guard))};
  }

  LossFunction print(const TNode& n, const LossFunction& e) {
    const Kernel& f = *n.kernel;
    const std::size_t omegas = f.dst().state_count();
    std::vector<std::vector<Rational>> likelihood(omegas, std::vector<Rational>(f.src().state_count()));
    std::vector<bool> reachable(omegas, false);
    for (std::size_t x = 0; x < f.src().state_count(); ++x)
      for (const auto& [w, p] : f.row(x)) {
        likelihood[w][x] = p;
        reachable[w] = true;
      }
    std::optional<LossFunction> sum;
    for (std::size_t w = 0; w < omegas; ++w) {
      if (!reachable[w]) continue;
      Predicate p = Predicate::from(n.pre, [&](std::size_t x) { return ExtRat(likelihood[w][x]); });
      LossFunction term = loss_conj(lift(p), e);
      sum = sum ? loss_add(*sum, term) : term;
    }
    return sum ? *sum : LossFunction::zero(pre_ctx(n));
  }

  LossFunction loop(const TNode& n, const LossFunction& e) {
    auto [g, ng] = guards(n);
    const bool record = n.site == opts_.record_site && partials_.empty();
    LoopStatus& status = loops_[n.site];
    ++status.evaluations;

    LossFunction term = loss_conj(ng, e);
    LossFunction sum = term;
    int index = 0;
    bool converged = false;
    while (true) {
      if (term.is_zero()) {
        converged = true;
        break;
      }
      if (index > 0) sum = loss_add(sum, term);
      if (record) partials_.push_back(sum);
      if (index == opts_.loop_budget) break;
      term = loss_conj(g, run(*n.children[0], term));
      ++index;
    }
    if (record && converged)
      while (static_cast<int>(partials_.size()) <= opts_.loop_budget) partials_.push_back(sum);
    if (!converged) status.converged = false;
    status.terms = std::max(status.terms, index);
    return sum;
  }

  CtxPtr ext_;
  WplOptions opts_;
  std::vector<CtxPtr> pre_, post_;
  std::vector<std::optional<Kernel>> kernels_;
  std::vector<LoopStatus> loops_;
  std::vector<LossFunction> partials_;
};

}  // namespace

std::vector<std::string> program_variables(const TypedProgram& p) {
  std::set<std::string> names;
  collect_names(*p.root, names);
  return {names.begin(), names.end()};
}

WplResult wpl_extended(const TypedProgram& p, const LossFunction& post, const VarContext& extension,
                       const WplOptions& opts) {
  if (opts.loop_budget <= 0) throw DomainError("loop budget must be positive");
  for (const auto& name : program_variables(p))
    if (extension.has(name)) throw ContextMismatch("extension variable '" + name + "' is also a program variable");
  VarContext expected = p.post->concat(extension);
  if (!post.ctx().same_variables(expected))
    throw ContextMismatch("post loss is over [" + post.ctx().str() + "], expected [" + expected.str() + "]");

  Evaluator ev(p, extension, opts);
  LossFunction pre = loss_canonicalize(ev.run(*p.root, post));
  pre = loss_reorder(pre, ev.pre_ctx(*p.root));
  return WplResult{pre, ev.statuses(), ev.partials()};
}

WplResult wpl(const TypedProgram& p, const LossFunction& post, const WplOptions& opts) {
  return wpl_extended(p, post, VarContext(), opts);
}

}  // namespace kuifje
