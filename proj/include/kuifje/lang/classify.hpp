#pragma once

#include "kuifje/lang/ast.hpp"

namespace kuifje {

/// No If, While or Print. Assert counts as hidden. A program with
/// unresolved calls is neither hidden nor choiceless.
bool classify_hidden(const Stmt& p);

/// No nondeterministic choice.
bool classify_choiceless(const Stmt& p);

bool contains_kind(const Stmt& p, Stmt::Kind kind);

}  // namespace kuifje
