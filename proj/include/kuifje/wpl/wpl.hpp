#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kuifje/lang/typecheck.hpp"
#include "kuifje/loss/loss.hpp"

namespace kuifje {

/// Outcome of evaluating one While site. `terms` is the index of the first
/// zero term when converged, else the budget N (terms 0..N were summed).
struct LoopStatus {
  bool converged = true;
  int terms = 0;
  int evaluations = 0;
  std::string str() const;
};

struct WplOptions {
  int loop_budget = 64;
  /// Records S_0 .. S_N for the first evaluation of this While site.
  int record_site = -1;
};

struct WplResult {
  LossFunction pre;
  std::vector<LoopStatus> loops;  // indexed by While site
  std::vector<LossFunction> partial_sums;
  bool truncated() const;
};

/// KUIFJE_LOOP_BUDGET when set to a positive integer, else 64.
int default_loop_budget();

/// Pre-loss over p.pre. The post loss must be over p.post, in any order.
WplResult wpl(const TypedProgram& p, const LossFunction& post, const WplOptions& opts = {});

/// Pre-loss over p.pre followed by `extension`. The post loss must be over
/// the variables of p.post and `extension`, in any order.
WplResult wpl_extended(const TypedProgram& p, const LossFunction& post, const VarContext& extension,
                       const WplOptions& opts = {});

/// Every variable name appearing in some context of the typed program.
std::vector<std::string> program_variables(const TypedProgram& p);

}  // namespace kuifje
