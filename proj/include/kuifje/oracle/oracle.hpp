#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kuifje/lang/typecheck.hpp"
#include "kuifje/loss/loss.hpp"

namespace kuifje {

/// One observation history of a forward run: the events seen so far, its
/// probability, and the (normalized) posterior over the current state.
struct Branch {
  std::vector<std::string> history;
  Rational mass{0};
  Distribution posterior;
  /// mass · posterior, kept unnormalized for exact sums.
  std::vector<Rational> joint;
};

/// Deterministic resolver: (history, nondet site) ↦ take the right branch.
using Strategy = std::map<std::pair<std::string, int>, bool>;

std::string history_key(const std::vector<std::string>& history);

/// Forward run of a loop-free program from a total prior. Branches split at
/// If (by branch taken) and Print (by value); abort mass is dropped.
/// Raises DomainError if the program has a loop or the strategy is not
/// defined on some reachable history.
std::vector<Branch> run_strategy(const TypedProgram& p, const Distribution& prior, const Strategy& s);

/// Σ_branches min over generators of the expected loss under the branch.
ExtRat branch_risk(const std::vector<Branch>& branches, const LossFunction& post);

/// Minimum over strategies of branch_risk, choosing per history greedily.
ExtRat min_bayes_risk(const TypedProgram& p, const Distribution& prior, const LossFunction& post);

/// Every deterministic strategy, restricted to its reachable histories.
/// Raises DomainError past `cap` strategies.
std::vector<Strategy> enumerate_strategies(const TypedProgram& p, const Distribution& prior,
                                           std::size_t cap = 100000);

/// min_bayes_risk by running every enumerated strategy.
ExtRat min_bayes_risk_exhaustive(const TypedProgram& p, const Distribution& prior, const LossFunction& post,
                                 std::size_t cap = 100000);

}  // namespace kuifje
