#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kuifje/algebra/context.hpp"
#include "kuifje/algebra/ext_rat.hpp"

namespace kuifje {

/// A function from the states of a context into [0, ∞], stored densely.
class Predicate {
 public:
  Predicate(CtxPtr ctx, std::vector<ExtRat> entries);

  static Predicate zero(CtxPtr ctx);
  static Predicate ones(CtxPtr ctx);
  static Predicate constant(CtxPtr ctx, const ExtRat& r);
  static Predicate point(CtxPtr ctx, std::size_t state);
  static Predicate from(CtxPtr ctx, const std::function<ExtRat(std::size_t)>& f);

  const CtxPtr& ctx_ptr() const { return ctx_; }
  const VarContext& ctx() const { return *ctx_; }
  const std::vector<ExtRat>& entries() const { return entries_; }
  const ExtRat& operator[](std::size_t state) const { return entries_[state]; }
  std::size_t size() const { return entries_.size(); }

  bool is_zero() const;
  bool is_finite() const;

  /// "[(0)=1, (2)=1]" listing nonzero entries.
  std::string str() const;

  friend bool operator==(const Predicate& a, const Predicate& b);
  /// Lexicographic on entries; only meaningful over equal contexts.
  friend bool operator<(const Predicate& a, const Predicate& b) { return a.entries_ < b.entries_; }

 private:
  CtxPtr ctx_;
  std::vector<ExtRat> entries_;
};

/// A subprobability distribution over the states of a context.
struct Distribution {
  CtxPtr ctx;
  std::vector<Rational> weights;

  static Distribution point(CtxPtr ctx, std::size_t state);
  static Distribution uniform(CtxPtr ctx);
  Rational mass() const;
  /// Throws DomainError unless weights are ≥ 0 and sum to at most 1.
  void validate() const;
  std::string str() const;
};

void require_same_ctx(const VarContext& a, const VarContext& b, const char* op);

Predicate pred_add(const Predicate& a, const Predicate& b);
Predicate pred_scale(const ExtRat& r, const Predicate& e);
/// Pointwise product e1 ⊠ e2.
Predicate pred_conj(const Predicate& a, const Predicate& b);
/// ¬e = 1 - e; requires e ≤ 1.
Predicate pred_complement(const Predicate& e);
/// Context extension: result over e.ctx followed by `extra`, constant in extra.
Predicate pred_extend(const Predicate& e, const VarContext& extra);
/// Lifts e to a context containing all its variables.
Predicate pred_lift(const Predicate& e, const CtxPtr& target);
/// Restates e over a permutation of its context.
Predicate pred_reorder(const Predicate& e, const CtxPtr& target);
bool pred_leq(const Predicate& a, const Predicate& b);
/// Σ_x e(x)·δ(x).
ExtRat pred_expect(const Predicate& e, const Distribution& d);

}  // namespace kuifje
