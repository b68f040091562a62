#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "kuifje/lang/ast.hpp"

namespace kuifje {

/// A bare program: `stmt (';' stmt)*`.
StmtPtr parse_program(std::string_view text);

/// `context decls` (optional) followed by a program.
ProgramFile parse_program_file(std::string_view text);

/// Sections `shared:`, `encap:`, `init:`, `op NAME:` (repeatable), `final:`.
Datatype parse_datatype(std::string_view text);

/// Sections `shared:` (optional), `client:`, `body:`.
ProgramContext parse_context(std::string_view text);

using ParsedFile = std::variant<ProgramFile, Datatype, ProgramContext>;

/// Dispatches on the section keywords present in the text.
ParsedFile parse_any(std::string_view text);

ExprPtr parse_expr(std::string_view text);
DistExpr parse_dist(std::string_view text);

/// Variable declarations `n:{0,1,2,3} b:int 0..1 H:{a,b,c}`.
std::vector<Variable> parse_decls(std::string_view text);
std::vector<Value> parse_domain(std::string_view text);
Value parse_value(std::string_view text);

}  // namespace kuifje
