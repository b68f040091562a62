#include "doctest.h"
#include "kuifje/errors.hpp"
#include "kuifje/oracle/oracle.hpp"
#include "kuifje/wpl/wpl.hpp"
#include "support/util.hpp"

using namespace kuifje;
using testutil::ctx_of;
using testutil::min_of;
using testutil::typed;

TEST_CASE("skip under a constant loss") {
  auto ctx = ctx_of("b:{0,1}");
  auto d = Distribution::uniform(ctx);
  CHECK(min_bayes_risk(typed("skip", ctx), d, LossFunction::ones(ctx)) == ExtRat(1));
}

TEST_CASE("abort mass costs nothing") {
  auto ctx = ctx_of("b:{0,1}");
  auto d = Distribution::uniform(ctx);
  CHECK(min_bayes_risk(typed("abort", ctx), d, LossFunction::ones(ctx)) == ExtRat(0));
  CHECK(min_bayes_risk(typed("assert b", ctx), d, LossFunction::ones(ctx)) == ExtRat(Rational(1, 2)));
  auto runs = run_strategy(typed("assert b = 1", ctx), d, {});
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].mass == Rational(1, 2));
}

TEST_CASE("parity leak: the adversary pays for the less likely value in each half") {
  auto pre = ctx_of("n:int 0..3");
  auto p = typed("print (n div 2); hidvar b := 0 [] 1", pre);
  auto post = LossFunction::embed(pred_indicator(p.post, "(n+b) mod 2 = 0"));
  Distribution d{pre, {Rational(1, 8), Rational(3, 8), Rational(1, 4), Rational(1, 4)}};
  CHECK(min_bayes_risk(p, d, post) == ExtRat(Rational(1, 8) + Rational(1, 4)));
  CHECK(min_bayes_risk_exhaustive(p, d, post) == ExtRat(Rational(3, 8)));
  CHECK(eval_loss(wpl(p, post).pre, d) == ExtRat(Rational(3, 8)));
}

TEST_CASE("branches split on prints and ifs") {
  auto ctx = ctx_of("n:int 0..3");
  auto p = typed("if n < 2 { print n mod 2 } else { skip }", ctx);
  auto runs = run_strategy(p, Distribution::uniform(ctx), {});
  REQUIRE(runs.size() == 3);
  Rational total = 0;
  for (const auto& b : runs) total += b.mass;
  CHECK(total == 1);
  CHECK(runs[0].history.front().find("then") != std::string::npos);
}

TEST_CASE("strategies are keyed by history") {
  auto ctx = ctx_of("b:{0,1}");
  auto p = typed("print b; b := 0 [] 1", ctx);
  auto all = enumerate_strategies(p, Distribution::uniform(ctx));
  // one binary choice after each of the two observations
  CHECK(all.size() == 4);
  auto guess = min_of(ctx, {"b"});
  CHECK(min_bayes_risk_exhaustive(p, Distribution::uniform(ctx), guess) == ExtRat(0));
  CHECK_THROWS_AS(run_strategy(p, Distribution::uniform(ctx), {}), DomainError);
}

TEST_CASE("the adversary cannot see hidden state") {
  auto ctx = ctx_of("b:{0,1}");
  auto p = typed("hidvar h := 0 @ 1/2 | 1; b := 0 [] 1; b := (b + h) mod 2; unvar h", ctx);
  CHECK(min_bayes_risk(p, Distribution::uniform(ctx), min_of(ctx, {"b"})) == ExtRat(Rational(1, 2)));
}

TEST_CASE("loops and partial priors are rejected") {
  auto ctx = ctx_of("c:{0,1}");
  auto loop = typed("while c = 1 { c := 0 }", ctx);
  CHECK_THROWS_AS(min_bayes_risk(loop, Distribution::uniform(ctx), LossFunction::ones(ctx)), DomainError);
  Distribution half{ctx, {Rational(1, 4), Rational(1, 4)}};
  CHECK_THROWS_AS(min_bayes_risk(typed("skip", ctx), half, LossFunction::ones(ctx)), DomainError);
}

TEST_CASE("strategy enumeration is capped") {
  auto ctx = ctx_of("a:int 0..3");
  auto p = typed("print a; a := 0 [] 1; print a; a := 0 [] 1", ctx);
  CHECK_THROWS_AS(enumerate_strategies(p, Distribution::uniform(ctx), 10), DomainError);
}
