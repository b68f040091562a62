#include "support/laws.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "kuifje/lang/classify.hpp"
#include "kuifje/lang/parser.hpp"
#include "kuifje/oracle/oracle.hpp"
#include "kuifje/wpl/wpl.hpp"
#include "support/gen.hpp"

namespace kuifje::testgen {

namespace {

// A failed case: empty string means the law held.
using Check = std::function<std::string(Rng&)>;

CtxPtr ctx_of(const std::string& decls) { return make_ctx(VarContext(parse_decls(decls))); }

LossFunction pre(const ProgramCase& c, const LossFunction& e) { return wpl(c.program, e).pre; }

std::string fail(const ProgramCase& c, const std::string& what) {
  return "[" + c.decls + "] " + c.text + ": " + what;
}

std::string check_monotone(Rng& rng) {
  ProgramCase c = random_program(rng);
  LossFunction e1 = random_loss(rng, c.program.post, below(rng, 4) == 0);
  // E1 ⊑ E2: raise every generator, or keep a subset of them.
  LossFunction e2 = e1;
  if (below(rng, 2) == 0 || e1.gens().size() == 1) {
    e2 = loss_add(e1, LossFunction::embed(random_predicate(rng, c.program.post)));
  } else {
    std::vector<Predicate> keep(e1.gens().begin(), e1.gens().end() - 1);
    e2 = LossFunction(e1.ctx_ptr(), std::move(keep));
  }
  if (!loss_refines(e1, e2)) return fail(c, "generator setup");
  return loss_refines(pre(c, e1), pre(c, e2)) ? "" : fail(c, "wpl(E1) ⋢ wpl(E2)");
}

std::string check_superlinear(Rng& rng) {
  ProgramCase c = random_program(rng);
  LossFunction e1 = random_loss(rng, c.program.post, false, 2), e2 = random_loss(rng, c.program.post, false, 2);
  LossFunction whole = pre(c, loss_add(e1, e2));
  LossFunction parts = loss_add(pre(c, e1), pre(c, e2));
  return loss_refines(parts, whole) ? "" : fail(c, "wpl(E1)+wpl(E2) ⋢ wpl(E1+E2)");
}

std::string check_homogeneous(Rng& rng) {
  ProgramCase c = random_program(rng);
  LossFunction e = random_loss(rng, c.program.post, below(rng, 4) == 0);
  ExtRat r;
  switch (below(rng, 4)) {
    case 0: r = ExtRat(0); break;
    case 1: r = ExtRat::infinity(); break;
    default: r = ExtRat(random_rational(rng, 5, 0, 3));
  }
  return loss_equal(pre(c, loss_scale(r, e)), loss_scale(r, pre(c, e))) ? ""
                                                                          : fail(c, "scaling by " + r.str());
}

std::string check_partial(Rng& rng) {
  ProgramCase c = random_program(rng);
  LossFunction w = pre(c, LossFunction::ones(c.program.post));
  return loss_member(Predicate::ones(c.program.pre), w) ? "" : fail(c, "1 ∉ wpl(1)");
}

std::string check_hidden_min(Rng& rng) {
  ProgramCase c = random_program(rng, hidden_shape());
  if (!classify_hidden(*parse_program(c.text))) return fail(c, "generator produced a non-hidden program");
  LossFunction e1 = random_loss(rng, c.program.post), e2 = random_loss(rng, c.program.post);
  return loss_equal(pre(c, loss_min(e1, e2)), loss_min(pre(c, e1), pre(c, e2))) ? ""
                                                                                  : fail(c, "⊓ not preserved");
}

std::string check_choiceless_linear(Rng& rng) {
  ProgramCase c = random_program(rng, choiceless_shape());
  if (!classify_choiceless(*parse_program(c.text))) return fail(c, "generator produced a choice");
  LossFunction e1 = random_loss(rng, c.program.post, false, 2), e2 = random_loss(rng, c.program.post, false, 2);
  return loss_equal(pre(c, loss_add(e1, e2)), loss_add(pre(c, e1), pre(c, e2))) ? "" : fail(c, "not additive");
}

std::string check_frame(Rng& rng) {
  ProgramCase c = random_program(rng);
  const VarContext z(parse_decls("z:{0,1,2}"));
  auto zc = make_ctx(z);
  auto yz = make_ctx(c.program.post->concat(z));
  auto xz = make_ctx(c.program.pre->concat(z));
  Predicate ez = random_predicate(rng, zc);
  LossFunction ey = random_loss(rng, c.program.post);
  LossFunction lhs = wpl_extended(c.program, loss_conj(pred_lift(ez, yz), loss_lift(ey, yz)), z).pre;
  LossFunction rhs = loss_conj(pred_lift(ez, xz), loss_lift(pre(c, ey), xz));
  return loss_equal(loss_reorder(lhs, xz), rhs) ? "" : fail(c, "wpl_Z(e_Z ⊠ E) ≠ e_Z ⊠ wpl(E)");
}

std::string check_correlation(Rng& rng) {
  ProgramCase c = random_program(rng);
  const VarContext z(parse_decls("z:{0,1}")), w(parse_decls("w:{0,1,2}"));
  Kernel g = random_kernel(rng, make_ctx(z), make_ctx(w));
  Kernel gx = kernel_tensor(Kernel::identity(c.program.pre), g);
  Kernel gy = kernel_tensor(Kernel::identity(c.program.post), g);
  LossFunction e = random_loss(rng, gy.dst_ptr());
  LossFunction lhs = loss_map(gx, loss_reorder(wpl_extended(c.program, e, w).pre, gx.dst_ptr()));
  LossFunction rhs = loss_reorder(wpl_extended(c.program, loss_map(gy, e), z).pre, gx.src_ptr());
  return loss_equal(lhs, rhs) ? "" : fail(c, "(id⊗g)ᵀ ∘ wpl_W ≠ wpl_Z ∘ (id⊗g)ᵀ");
}

std::string check_map_linear_min(Rng& rng) {
  auto x = ctx_of(random_decls(rng));
  auto y = ctx_of(random_decls(rng));
  Kernel f = random_kernel(rng, x, y, below(rng, 2) == 0);
  LossFunction e1 = random_loss(rng, y, below(rng, 4) == 0), e2 = random_loss(rng, y);
  if (!loss_equal(loss_map(f, loss_add(e1, e2)), loss_add(loss_map(f, e1), loss_map(f, e2))))
    return "[" + x->str() + " → " + y->str() + "] loss_map not additive";
  if (!loss_equal(loss_map(f, loss_min(e1, e2)), loss_min(loss_map(f, e1), loss_map(f, e2))))
    return "[" + x->str() + " → " + y->str() + "] loss_map not ⊓-preserving";
  return "";
}

CtxPtr renamed_ctx(Rng& rng, const std::string& prefix) {
  const std::size_t n = 1 + below(rng, 2);
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < n; ++i) {
    Variable v{prefix + std::to_string(i), {}};
    const std::size_t d = 2 + below(rng, 2);
    for (std::size_t k = 0; k < d; ++k) v.domain.push_back(Value(Rational(static_cast<long>(k))));
    vars.push_back(std::move(v));
  }
  return make_ctx(VarContext(std::move(vars)));
}

std::string check_tensor_functorial(Rng& rng) {
  auto a = renamed_ctx(rng, "a"), b = renamed_ctx(rng, "b"), c = renamed_ctx(rng, "c");
  auto p = renamed_ctx(rng, "p"), q = renamed_ctx(rng, "q"), r = renamed_ctx(rng, "r");
  Kernel f = random_kernel(rng, a, b), f2 = random_kernel(rng, b, c);
  Kernel g = random_kernel(rng, p, q), g2 = random_kernel(rng, q, r);
  if (!(kernel_tensor(f, g).then(kernel_tensor(f2, g2)) == kernel_tensor(f.then(f2), g.then(g2))))
    return "(f⊗g);(f'⊗g') ≠ (f;f')⊗(g;g')";
  if (!(kernel_tensor(Kernel::identity(a), Kernel::identity(p)) ==
        Kernel::identity(make_ctx(a->concat(*p)))))
    return "id⊗id ≠ id";
  // Dual form on rectangles: (f⊗g)ᵀ(e⊗e') = fᵀe ⊗ gᵀe'.
  Predicate e = random_predicate(rng, b), e2 = random_predicate(rng, q);
  auto bq = make_ctx(b->concat(*q));
  auto ap = make_ctx(a->concat(*p));
  Predicate rect = pred_conj(pred_lift(e, bq), pred_lift(e2, bq));
  Predicate lhs = kernel_tensor(f, g).dual_apply(rect);
  Predicate rhs = pred_conj(pred_lift(f.dual_apply(e), ap), pred_lift(g.dual_apply(e2), ap));
  return lhs == rhs ? "" : "(f⊗g)ᵀ(e⊗e') ≠ fᵀe ⊗ gᵀe'";
}

std::string check_partiality_closure(Rng& rng) {
  auto a = renamed_ctx(rng, "a"), b = renamed_ctx(rng, "b"), c = renamed_ctx(rng, "c");
  auto p = renamed_ctx(rng, "p"), q = renamed_ctx(rng, "q");
  Kernel f = random_kernel(rng, a, b), f2 = random_kernel(rng, b, c), g = random_kernel(rng, p, q);
  for (const Kernel& k : {f.then(f2), kernel_tensor(f, g)}) {
    Predicate one = k.dual_apply(Predicate::ones(k.dst_ptr()));
    if (!pred_leq(one, Predicate::ones(k.src_ptr()))) return "kᵀ(1) ≰ 1";
    for (std::size_t x = 0; x < k.rows().size(); ++x)
      if (k.row_sum(x) > 1) return "row sum above 1";
  }
  Kernel t = random_kernel(rng, a, b, true), t2 = random_kernel(rng, p, q, true);
  if (!kernel_tensor(t, t2).is_total() || !t.then(random_kernel(rng, b, c, true)).is_total())
    return "total kernels lost totality";
  return "";
}

const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> m = {
      {"monotone", check_monotone},
      {"superlinear", check_superlinear},
      {"homogeneous", check_homogeneous},
      {"partial", check_partial},
      {"hidden-preserves-min", check_hidden_min},
      {"choiceless-linear", check_choiceless_linear},
      {"weak-frame-rule", check_frame},
      {"correlation", check_correlation},
      {"loss-map-linear-min", check_map_linear_min},
      {"tensor-functorial", check_tensor_functorial},
      {"partiality-closure", check_partiality_closure},
  };
  return m;
}

LawReport run(const std::string& name, std::uint64_t seed, int cases, const Check& check) {
  LawReport rep;
  rep.name = name;
  Rng rng(seed);
  for (int i = 0; i < cases; ++i) {
    std::string msg;
    try {
      msg = check(rng);
    } catch (const std::exception& e) {
      msg = std::string("exception: ") + e.what();
    }
    ++rep.cases;
    if (!msg.empty()) {
      if (rep.failures++ == 0) rep.first_failure = "case " + std::to_string(i) + ": " + msg;
    }
  }
  return rep;
}

ProgramShape oracle_shape(int sites) {
  ProgramShape s;
  s.max_nondet_sites = sites;
  s.max_prints = 2;
  s.allow_while = false;
  return s;
}

}  // namespace

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : checks()) out.push_back(k);
    return out;
  }();
  return names;
}

LawReport run_law(const std::string& name, std::uint64_t seed, int cases) {
  auto it = checks().find(name);
  if (it == checks().end()) throw std::invalid_argument("unknown law " + name);
  return run(name, seed, cases, it->second);
}

LawReport run_duality(std::uint64_t seed, int cases) {
  return run("duality", seed, cases, [](Rng& rng) -> std::string {
    ProgramCase c = random_program(rng, oracle_shape(2));
    Distribution prior = random_prior(rng, c.program.pre);
    LossFunction e = random_loss(rng, c.program.post);
    ExtRat risk = min_bayes_risk(c.program, prior, e);
    ExtRat value = eval_loss(wpl(c.program, e).pre, prior);
    return risk == value ? "" : fail(c, "oracle " + risk.str() + " vs wpl " + value.str());
  });
}

LawReport run_greedy_vs_exhaustive(std::uint64_t seed, int cases) {
  return run("greedy-vs-exhaustive", seed, cases, [](Rng& rng) -> std::string {
    ProgramCase c = random_program(rng, oracle_shape(3));
    Distribution prior = random_prior(rng, c.program.pre);
    LossFunction e = random_loss(rng, c.program.post);
    ExtRat greedy = min_bayes_risk(c.program, prior, e);
    ExtRat all = min_bayes_risk_exhaustive(c.program, prior, e);
    return greedy == all ? "" : fail(c, "greedy " + greedy.str() + " vs exhaustive " + all.str());
  });
}

}  // namespace kuifje::testgen
