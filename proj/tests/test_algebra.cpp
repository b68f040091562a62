#include "doctest.h"
#include "kuifje/algebra/kernel.hpp"
#include "kuifje/errors.hpp"
#include "support/util.hpp"

using namespace kuifje;
using testutil::ctx_of;

TEST_CASE("extended rationals form a rig with an absorbing infinity") {
  const ExtRat inf = ExtRat::infinity();
  const ExtRat half(Rational(1, 2));
  CHECK(half + half == ExtRat(1));
  CHECK(inf + half == inf);
  CHECK(inf * half == inf);
  CHECK(inf * ExtRat(0) == ExtRat(0));
  CHECK(ExtRat(0) * inf == ExtRat(0));
  CHECK(half < inf);
  CHECK(ExtRat(3) > ExtRat(Rational(5, 2)));
  CHECK_THROWS_AS(inf.value(), DomainError);
  CHECK(ExtRat::parse("inf").is_infinite());
  CHECK(ExtRat::parse("6/4").str() == "3/2");
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-3") == Rational(-3));
}

TEST_CASE("states enumerate with the first variable most significant") {
  auto ctx = ctx_of("n:{0,1,2} b:{0,1}");
  CHECK(ctx->state_count() == 6);
  CHECK(ctx->state_str(3) == "(1,1)");
  CHECK(ctx->value(5, 0) == Value(2));
  CHECK(ctx->with_digit(0, 0, 2) == 4);
  CHECK(ctx->str() == "n:{0,1,2} b:{0,1}");
  auto swapped = ctx_of("b:{0,1} n:{0,1,2}");
  CHECK(ctx->same_variables(*swapped));
  CHECK_FALSE(*ctx == *swapped);
  auto map = projection_map(*ctx, *ctx_of("b:{0,1}"));
  CHECK(map == std::vector<std::size_t>{0, 1, 0, 1, 0, 1});
}

TEST_CASE("predicate operations") {
  auto ctx = ctx_of("b:{0,1}");
  Predicate e(ctx, {ExtRat(Rational(1, 4)), ExtRat(1)});
  CHECK(pred_complement(e) == Predicate(ctx, {ExtRat(Rational(3, 4)), ExtRat(0)}));
  CHECK(pred_add(e, e)[0] == ExtRat(Rational(1, 2)));
  CHECK(pred_conj(e, e)[0] == ExtRat(Rational(1, 16)));
  CHECK(pred_leq(e, Predicate::ones(ctx)));
  CHECK_FALSE(pred_leq(Predicate::ones(ctx), e));
  CHECK(pred_expect(e, Distribution::uniform(ctx)) == ExtRat(Rational(5, 8)));
  CHECK_THROWS_AS(pred_complement(pred_scale(ExtRat(2), e)), DomainError);

  auto wide = pred_extend(e, VarContext(parse_decls("c:{0,1,2}")));
  CHECK(wide.size() == 6);
  CHECK(wide[2] == ExtRat(Rational(1, 4)));
  CHECK(wide[3] == ExtRat(1));
}

TEST_CASE("mismatched contexts are rejected") {
  auto a = Predicate::ones(ctx_of("b:{0,1}"));
  auto b = Predicate::ones(ctx_of("c:{0,1}"));
  CHECK_THROWS_AS(pred_add(a, b), ContextMismatch);
}

TEST_CASE("kernel duals") {
  auto ctx = ctx_of("b:{0,1}");
  // b := 0 @ 1/3 | 1
  Kernel coin(ctx, ctx, {{{0, Rational(1, 3)}, {1, Rational(2, 3)}}, {{0, Rational(1, 3)}, {1, Rational(2, 3)}}});
  Predicate e(ctx, {ExtRat(3), ExtRat(0)});
  CHECK(coin.dual_apply(e) == Predicate::constant(ctx, ExtRat(1)));
  CHECK(Kernel::identity(ctx).dual_apply(e) == e);
  CHECK(coin.is_total());

  Kernel flip(ctx, ctx, {{{1, Rational(1)}}, {{0, Rational(1)}}});
  CHECK(flip.then(flip) == Kernel::identity(ctx));
  // dual of sequential composition runs backwards
  CHECK(coin.then(flip).dual_apply(e) == coin.dual_apply(flip.dual_apply(e)));

  Kernel leaky(ctx, ctx, {{{0, Rational(1, 2)}}, {}});
  CHECK_FALSE(leaky.is_total());
  CHECK(leaky.dual_apply(Predicate::ones(ctx)) == Predicate(ctx, {ExtRat(Rational(1, 2)), ExtRat(0)}));
  CHECK_THROWS_AS(Kernel(ctx, ctx, {{{0, Rational(3, 4)}, {1, Rational(1, 2)}}, {}}), DomainError);
}

TEST_CASE("kernel tensor acts independently on each side") {
  auto b = ctx_of("b:{0,1}");
  auto c = ctx_of("c:{0,1,2}");
  Kernel f(b, b, {{{1, Rational(1)}}, {{0, Rational(1, 2)}, {1, Rational(1, 2)}}});
  Kernel g = Kernel::identity(c);
  Kernel t = kernel_tensor(f, g);
  CHECK(t.src().str() == "b:{0,1} c:{0,1,2}");
  auto e = Predicate::from(t.dst_ptr(), [](std::size_t s) { return ExtRat(static_cast<int>(s)); });
  auto d = t.dual_apply(e);
  // (0, c) goes to (1, c) = state 3 + c
  CHECK(d[0] == ExtRat(3));
  CHECK(d[2] == ExtRat(5));
  // (1, c) goes to (0, c) or (1, c) evenly
  CHECK(d[4] == ExtRat(Rational(5, 2)));
}
