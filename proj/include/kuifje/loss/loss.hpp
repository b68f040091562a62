#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kuifje/algebra/kernel.hpp"
#include "kuifje/algebra/predicate.hpp"

namespace kuifje {

/// A nonempty finite set of generators over one context, denoting the
/// upper convex closure of the generators. Equality is semantic; use
/// loss_equal, never the generator lists.
class LossFunction {
 public:
  /// Keeps the generators as given.
  LossFunction(CtxPtr ctx, std::vector<Predicate> gens);

  static LossFunction embed(const Predicate& e);
  static LossFunction zero(CtxPtr ctx) { return embed(Predicate::zero(std::move(ctx))); }
  static LossFunction ones(CtxPtr ctx) { return embed(Predicate::ones(std::move(ctx))); }

  const CtxPtr& ctx_ptr() const { return ctx_; }
  const VarContext& ctx() const { return *ctx_; }
  const std::vector<Predicate>& gens() const { return gens_; }
  /// True when produced by loss_canonicalize: no generator is redundant.
  bool canonical() const { return canonical_; }

  /// True iff the zero predicate is a member, i.e. the loss equals embed(0).
  bool is_zero() const;

  std::string str() const;

 private:
  friend LossFunction loss_canonicalize(const LossFunction& e);
  friend LossFunction loss_add(const LossFunction& e1, const LossFunction& e2);
  CtxPtr ctx_;
  std::vector<Predicate> gens_;
  bool canonical_ = false;
};

/// Outcome of a membership query with a certificate either way.
struct Membership {
  bool member = false;
  /// Convex weights over the generators with Σ λ_i g_i ≤ e (when member).
  std::vector<Rational> weights;
  /// A distribution w with Σ w·e < min_i Σ w·g_i (when not member).
  std::vector<Rational> separator;
};

Membership loss_member_certified(const Predicate& e, const LossFunction& loss);
bool loss_member(const Predicate& e, const LossFunction& loss);

struct RefinementCheck {
  bool holds = true;
  /// Index of a generator of the finer loss outside the coarser one.
  std::optional<std::size_t> failing;
  /// Distribution at which eval of the coarser loss exceeds the finer one.
  std::optional<Distribution> witness;
};

/// E1 ⊑ E2: every generator of E2 is a member of E1.
RefinementCheck loss_refines_certified(const LossFunction& e1, const LossFunction& e2);
bool loss_refines(const LossFunction& e1, const LossFunction& e2);
bool loss_equal(const LossFunction& e1, const LossFunction& e2);

/// Removes duplicate, dominated and LP-redundant generators.
LossFunction loss_canonicalize(const LossFunction& e);

LossFunction loss_add(const LossFunction& e1, const LossFunction& e2);
LossFunction loss_scale(const ExtRat& r, const LossFunction& e);
LossFunction loss_min(const LossFunction& e1, const LossFunction& e2);
/// Applies the dual of f to every generator; f.dst must equal the loss context.
LossFunction loss_map(const Kernel& f, const LossFunction& e);
/// e ⊠ E, generator-wise pointwise product.
LossFunction loss_conj(const Predicate& e, const LossFunction& loss);
/// min over generators of the expected value at δ.
ExtRat eval_loss(const LossFunction& loss, const Distribution& d);

/// Restates a loss over a permutation of its context.
LossFunction loss_reorder(const LossFunction& e, const CtxPtr& target);
/// Lifts a loss to a context containing all its variables.
LossFunction loss_lift(const LossFunction& e, const CtxPtr& target);

}  // namespace kuifje
