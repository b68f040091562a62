#pragma once

#include <string>
#include <vector>

#include "kuifje/lang/ast.hpp"

namespace kuifje {

std::string print_expr(const Expr& e);
std::string print_dist(const DistExpr& d);
std::string print_domain(const std::vector<Value>& domain);
std::string print_decls(const std::vector<Variable>& vars);

/// One statement per line, nested blocks indented by two spaces.
std::string print_program(const Stmt& s);
std::string print_program_file(const ProgramFile& f);
std::string print_datatype(const Datatype& d);
std::string print_context(const ProgramContext& c);

/// Single-line rendering, used in reports.
std::string print_inline(const Stmt& s);

}  // namespace kuifje
