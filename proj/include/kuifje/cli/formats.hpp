#pragma once

#include <string>
#include <string_view>

#include "kuifje/lang/eval.hpp"
#include "kuifje/loss/loss.hpp"

namespace kuifje {

/// Loss literal:
///   context n:{0,1,2,3} b:{0,1}
///   expr: (n + b) mod 2 = 0
///   table: (0,0)=1 (1,1)=1/2 (3,1)=inf
/// One generator per line; omitted table states are 0. `//` comments.
LossFunction parse_loss(std::string_view text, const AtomSet& extra_atoms = {});

/// The literal with one `table:` line per generator, in state order.
std::string format_loss(const LossFunction& loss);

/// "(0,1)=1/2 (1,0)=1/2" or "uniform", over the states of ctx.
Distribution parse_prior(std::string_view text, const CtxPtr& ctx);

/// Nonzero weights as "(0,1)=1/2 (1,0)=1/2".
std::string format_distribution(const Distribution& d);

/// Sparse "(0)=1 (2)=1/2"; "0" for the zero predicate.
std::string format_predicate(const Predicate& p);

/// Text with `//` comments removed.
std::string strip_comments(std::string_view text);

}  // namespace kuifje
