#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kuifje/algebra/context.hpp"
#include "kuifje/errors.hpp"

namespace kuifje {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Name, Unary, Binary, Call, Array, Tuple, Index };
  Kind kind;
  std::string op;  // operator symbol, function name or variable name
  Rational number;
  std::vector<ExprPtr> args;
  SourcePos pos;

  static ExprPtr make_number(Rational v, SourcePos pos = {});
  static ExprPtr make_name(std::string name, SourcePos pos = {});
  static ExprPtr make_unary(std::string op, ExprPtr a, SourcePos pos = {});
  static ExprPtr make_binary(std::string op, ExprPtr a, ExprPtr b, SourcePos pos = {});
  static ExprPtr make_call(std::string fn, std::vector<ExprPtr> args, SourcePos pos = {});
  static ExprPtr make_array(std::vector<ExprPtr> items, SourcePos pos = {});
  static ExprPtr make_tuple(std::vector<ExprPtr> items, SourcePos pos = {});
  static ExprPtr make_index(ExprPtr array, ExprPtr index, SourcePos pos = {});
};

/// Structural equality, ignoring positions.
bool same_expr(const Expr& a, const Expr& b);

/// A weighted list of deterministic expressions. Weights are exact, positive
/// and sum to at most 1; the deficit is abort mass.
struct DistExpr {
  struct Branch {
    ExprPtr expr;
    Rational weight;
  };
  std::vector<Branch> branches;

  static DistExpr point(ExprPtr e) { return DistExpr{{{std::move(e), Rational(1)}}}; }
};

bool same_dist(const DistExpr& a, const DistExpr& b);

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  enum class Kind { Skip, Abort, Seq, Assign, HidVar, Unvar, If, While, Print, NonDet, Assert, Call };
  Kind kind;
  std::vector<std::string> names;  // Assign targets; HidVar/Unvar/Call name
  std::optional<std::vector<Value>> domain;  // HidVar
  DistExpr dist;  // Assign, HidVar, Print
  ExprPtr guard;  // If, While, Assert
  std::vector<StmtPtr> body;  // Seq items; If {then, else}; While {body}; NonDet {left, right}
  SourcePos pos;

  static StmtPtr skip(SourcePos pos = {});
  static StmtPtr abort(SourcePos pos = {});
  static StmtPtr seq(std::vector<StmtPtr> items, SourcePos pos = {});
  static StmtPtr assign(std::vector<std::string> targets, DistExpr d, SourcePos pos = {});
  static StmtPtr hidvar(std::string name, std::optional<std::vector<Value>> domain, DistExpr d, SourcePos pos = {});
  static StmtPtr unvar(std::string name, SourcePos pos = {});
  static StmtPtr if_(ExprPtr guard, StmtPtr then, StmtPtr otherwise, SourcePos pos = {});
  static StmtPtr while_(ExprPtr guard, StmtPtr body, SourcePos pos = {});
  static StmtPtr print(DistExpr d, SourcePos pos = {});
  static StmtPtr nondet(StmtPtr left, StmtPtr right, SourcePos pos = {});
  static StmtPtr assert_(ExprPtr guard, SourcePos pos = {});
  static StmtPtr call(std::string op, SourcePos pos = {});
};

bool same_stmt(const Stmt& a, const Stmt& b);

/// A program with an optional declared initial context.
struct ProgramFile {
  std::optional<std::vector<Variable>> context;
  StmtPtr body;
};

/// (I, OP, F) over shared state S and encapsulated state A.
struct Datatype {
  std::vector<Variable> shared;
  std::optional<std::vector<Variable>> encap;
  StmtPtr init;
  std::vector<std::pair<std::string, StmtPtr>> ops;
  StmtPtr final;

  const StmtPtr* op(const std::string& name) const;
};

/// A client program over shared and client variables with `call` holes.
struct ProgramContext {
  std::optional<std::vector<Variable>> shared;
  std::vector<Variable> client;
  StmtPtr body;
};

}  // namespace kuifje
