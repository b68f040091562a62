#include "doctest.h"
#include "kuifje/errors.hpp"
#include "kuifje/wpl/wpl.hpp"
#include "support/util.hpp"

using namespace kuifje;
using testutil::ctx_of;
using testutil::min_of;
using testutil::pred;
using testutil::typed;

TEST_CASE("parity leak after a high-bit print") {
  auto pre = ctx_of("n:int 0..3");
  auto p = typed("print (n div 2); hidvar b := {0} [] {1}", pre);
  CHECK(p.post->str() == "n:{0,1,2,3} b:{0,1}");
  auto post = LossFunction::embed(pred_indicator(p.post, "(n+b) mod 2 = 0"));
  auto r = wpl(p, post);
  auto expected = min_of(pre, {"(n=0)+(n=2)", "(n=0)+(n=3)", "(n=1)+(n=2)", "(n=1)+(n=3)"});
  CHECK(loss_equal(r.pre, expected));
  CHECK(r.pre.gens().size() == 4);
}

TEST_CASE("basic statements") {
  auto ctx = ctx_of("b:{0,1}");
  auto guess = min_of(ctx, {"b = 0", "b = 1"});
  CHECK(loss_equal(wpl(typed("skip", ctx), guess).pre, guess));
  CHECK(loss_equal(wpl(typed("abort", ctx), guess).pre, LossFunction::zero(ctx)));
  // a hidden fair coin leaves the adversary guessing
  auto coin = wpl(typed("b := 0 @ 1/2 | 1", ctx), guess).pre;
  CHECK(loss_equal(coin, LossFunction::embed(Predicate::constant(ctx, ExtRat(Rational(1, 2))))));
  // printing it first lets the adversary guess right every time
  auto seen = wpl(typed("print b", ctx), guess).pre;
  CHECK(loss_equal(seen, LossFunction::zero(ctx)));
  // demonic choice takes the meet
  auto choose = wpl(typed("b := 0 [] 1", ctx), LossFunction::embed(pred(ctx, "b"))).pre;
  CHECK(loss_equal(choose, LossFunction::zero(ctx)));
  auto both = wpl(typed("b := 0 [] 1", ctx), min_of(ctx, {"b", "1 - b"})).pre;
  CHECK(loss_equal(both, LossFunction::zero(ctx)));
}

TEST_CASE("assert is a conditional abort") {
  auto ctx = ctx_of("n:int 0..3 b:{0,1}");
  auto post = min_of(ctx, {"n = b", "n + b", "2 * b"});
  for (const char* g : {"n < 2", "b / 2", "n = 3 or b = 0"}) {
    std::string a = std::string("assert ") + g;
    std::string i = std::string("if ") + g + " { skip } else { abort }";
    CHECK(loss_equal(wpl(typed(a.c_str(), ctx), post).pre, wpl(typed(i.c_str(), ctx), post).pre));
  }
}

TEST_CASE("if conditions on the guard and reveals the branch") {
  auto ctx = ctx_of("b:{0,1}");
  auto guess = min_of(ctx, {"b = 0", "b = 1"});
  auto branch = wpl(typed("if b = 1 { skip } else { skip }", ctx), guess).pre;
  CHECK(loss_equal(branch, LossFunction::zero(ctx)));
  // a fair guard reveals nothing about b
  auto fair = wpl(typed("if 1/2 { skip } else { skip }", ctx), guess).pre;
  CHECK(loss_equal(fair, guess));
}

TEST_CASE("hidden variables are projected away") {
  auto ctx = ctx_of("b:{0,1}");
  auto p = typed("hidvar h := b; b := 0 @ 1/2 | 1; b := (b + h) mod 2; unvar h", ctx);
  // a one-time pad: the guess stays at 1/2 whatever the prior
  auto pre = wpl(p, min_of(ctx, {"b = 0", "b = 1"})).pre;
  CHECK(loss_equal(pre, LossFunction::embed(Predicate::constant(ctx, ExtRat(Rational(1, 2))))));
}

TEST_CASE("print does not preserve the meet") {
  auto ctx = ctx_of("b:{0,1}");
  auto p = typed("print b", ctx);
  auto e1 = LossFunction::embed(pred(ctx, "b = 0"));
  auto e2 = LossFunction::embed(pred(ctx, "b = 1"));
  auto of_min = wpl(p, loss_min(e1, e2)).pre;
  auto min_of_pre = loss_min(wpl(p, e1).pre, wpl(p, e2).pre);
  CHECK_FALSE(loss_equal(of_min, min_of_pre));
  CHECK(loss_refines(of_min, min_of_pre));
}

TEST_CASE("geometric loop truncates with the expected partial sums") {
  auto ctx = ctx_of("c:{0,1}");
  auto p = typed("while c = 1 { c := 1 @ 1/2 | 0 }", ctx);
  auto one = LossFunction::ones(ctx);
  WplOptions o;
  o.loop_budget = 20;
  o.record_site = 0;
  auto r = wpl(p, one, o);
  REQUIRE(r.loops.size() == 1);
  CHECK_FALSE(r.loops[0].converged);
  CHECK(r.loops[0].str() == "Truncated(20)");
  CHECK(r.truncated());
  REQUIRE(r.partial_sums.size() == 21);
  auto at_one = Distribution::point(ctx, 1);
  for (int n = 0; n <= 20; ++n) {
    const Rational gap = Rational(1) - Rational(1, Integer(1) << n);
    CHECK(eval_loss(r.partial_sums[n], at_one) == ExtRat(gap));
    CHECK(loss_refines(loss_scale(ExtRat(gap), one), r.partial_sums[n]));
    if (n > 0) CHECK(loss_refines(r.partial_sums[n - 1], r.partial_sums[n]));
  }
}

TEST_CASE("countdown loop converges") {
  auto ctx = ctx_of("i:int 0..3");
  auto r = wpl(typed("while i > 0 { i := i - 1 }", ctx), LossFunction::ones(ctx));
  REQUIRE(r.loops.size() == 1);
  CHECK(r.loops[0].converged);
  CHECK(r.loops[0].terms == 4);
  CHECK(loss_equal(r.pre, LossFunction::ones(ctx)));
}

TEST_CASE("the iteration count is visible") {
  auto ctx = ctx_of("s:int 0..3 g:int 0..3");
  auto guess = LossFunction::embed(pred_indicator(ctx, "g != s"));
  auto leaky = wpl(typed("hidvar j := s; while j > 0 { j := j - 1 }; unvar j; g := 0 [] 1 [] 2 [] 3", ctx), guess);
  CHECK_FALSE(leaky.truncated());
  CHECK(loss_equal(leaky.pre, LossFunction::zero(ctx)));
  auto blind = wpl(typed("g := 0 [] 1 [] 2 [] 3", ctx), guess).pre;
  CHECK(eval_loss(blind, Distribution::uniform(ctx)) == ExtRat(Rational(3, 4)));
}

TEST_CASE("out-of-domain assignment aborts") {
  auto ctx = ctx_of("n:int 0..3");
  auto r = wpl(typed("n := n + 1", ctx), LossFunction::ones(ctx)).pre;
  CHECK(loss_equal(r, LossFunction::embed(pred(ctx, "n < 3"))));
}

TEST_CASE("correlated extension is carried unchanged") {
  auto ctx = ctx_of("b:{0,1}");
  auto p = typed("b := 0 @ 1/2 | 1", ctx);
  VarContext z(parse_decls("z:{0,1}"));
  auto full = make_ctx(ctx->concat(z));
  auto post = min_of(full, {"b = z", "b != z"});
  auto r = wpl_extended(p, post, z).pre;
  CHECK(r.ctx().str() == "b:{0,1} z:{0,1}");
  CHECK(loss_equal(r, LossFunction::embed(Predicate::constant(full, ExtRat(Rational(1, 2))))));
  CHECK_THROWS_AS(wpl(p, post), ContextMismatch);
}

TEST_CASE("post loss may list variables in any order") {
  auto ctx = ctx_of("a:{0,1} b:{0,1}");
  auto p = typed("a := b", ctx);
  auto swapped = min_of(ctx_of("b:{0,1} a:{0,1}"), {"a + b"});
  CHECK(loss_equal(wpl(p, swapped).pre, min_of(ctx, {"2 * b"})));
}
