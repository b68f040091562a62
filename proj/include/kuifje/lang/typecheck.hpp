#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kuifje/algebra/kernel.hpp"
#include "kuifje/lang/ast.hpp"
#include "kuifje/lang/eval.hpp"

namespace kuifje {

struct TNode;
using TNodePtr = std::shared_ptr<const TNode>;

/// A typechecked statement with its contexts and elaborated semantics.
///   Assign  kernel pre → pre
///   HidVar  kernel pre → post (post = pre plus the new variable, last)
///   Unvar   kernel pre → post (projection)
///   Print   kernel pre → observation context (one variable `obs`)
///   Assert  kernel pre → pre (diagonal scaling by the guard)
///   If/While guard over pre
struct TNode {
  Stmt::Kind kind;
  CtxPtr pre;
  CtxPtr post;
  std::optional<Kernel> kernel;
  std::optional<Predicate> guard;
  std::vector<TNodePtr> children;
  int id = -1;    // pre-order node number
  int site = -1;  // NonDet site or While loop number
  StmtPtr source;
};

struct TypecheckOptions {
  /// Domains for `hidvar` declarations that omit one, keyed by name.
  std::map<std::string, std::vector<Value>> hints;
  /// Treat `call` as skip (checking a context body on its own).
  bool calls_as_skip = false;
};

struct TypedProgram {
  TNodePtr root;
  CtxPtr pre;
  CtxPtr post;
  int node_count = 0;
  int nondet_sites = 0;
  int loop_sites = 0;
  AtomSet atoms;
};

/// Typechecks `p` from `initial`. Undeclared `hidvar` domains come from the
/// hints, else from the values the initializer can take. When branches only
/// disagree on such inferred domains, they are widened to the union.
TypedProgram typecheck(const StmtPtr& p, const CtxPtr& initial, const TypecheckOptions& opts = {});

/// Name of the observation variable of Print kernels.
inline constexpr const char* kObservationVar = "obs";

}  // namespace kuifje
