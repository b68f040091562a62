#pragma once

#include <map>
#include <string>
#include <vector>

#include "kuifje/lang/typecheck.hpp"

namespace kuifje {

/// A datatype whose components typecheck with I : S → S×A,
/// OP_j : S×A → S×A and F : S×A → S.
struct CheckedDatatype {
  Datatype source;
  CtxPtr shared;
  CtxPtr full;    // S×A as produced by I
  CtxPtr encap;   // A alone
  TypecheckOptions hints;  // domains of A, for `hidvar` without a domain
  TypedProgram init;
  std::vector<std::pair<std::string, TypedProgram>> ops;
  TypedProgram final;
};

CheckedDatatype check_datatype(const Datatype& d);

/// Checks a context body against a datatype's shared state and operation
/// names, with calls read as skip. Encapsulated names are out of scope.
TypedProgram check_context(const ProgramContext& c, const CheckedDatatype& d);

/// `I ; body[call OP ↦ OP] ; F`, with datatype-side names renamed away
/// from client names: x → x' → x'2 → x'3 ...
struct Inlined {
  StmtPtr program;
  CtxPtr initial;  // shared followed by client variables
  TypecheckOptions hints;
  std::map<std::string, std::string> renamed;
};

Inlined inline_context(const ProgramContext& c, const CheckedDatatype& d);

/// Renames variables in statements and expressions.
StmtPtr rename_stmt(const StmtPtr& s, const std::map<std::string, std::string>& m);
ExprPtr rename_expr(const ExprPtr& e, const std::map<std::string, std::string>& m);

/// Names declared by `hidvar` anywhere in the program.
std::vector<std::string> declared_names(const Stmt& s);

}  // namespace kuifje
