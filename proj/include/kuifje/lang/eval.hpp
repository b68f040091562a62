#pragma once

#include <set>
#include <string>
#include <string_view>

#include "kuifje/algebra/predicate.hpp"
#include "kuifje/lang/ast.hpp"

namespace kuifje {

using AtomSet = std::set<std::string>;

/// Atom names occurring in the domains of a context.
AtomSet atoms_of(const VarContext& ctx);
void add_atoms(AtomSet& atoms, const Value& v);

/// A state of a context, plus the atom names an identifier may denote
/// when it is not a variable.
struct Env {
  const VarContext& ctx;
  std::size_t state;
  const AtomSet& atoms;
};

/// Evaluates a deterministic expression. Errors (unbound names, ill-typed
/// operands, out-of-range indices, division by zero) are TypeErrors at the
/// offending subexpression.
Value eval_expr(const Expr& e, const Env& env);

/// Evaluates a guard and checks it lies in [0,1].
Rational eval_guard(const Expr& e, const Env& env);

/// The predicate x ↦ e(x); e must evaluate to a nonnegative number.
Predicate pred_from_expr(const CtxPtr& ctx, const Expr& e, const AtomSet& extra_atoms = {});

/// [[B]]: 1 where the boolean expression holds, 0 elsewhere.
Predicate pred_indicator(const CtxPtr& ctx, const Expr& b, const AtomSet& extra_atoms = {});
Predicate pred_indicator(const CtxPtr& ctx, std::string_view bexpr);

}  // namespace kuifje
