#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "kuifje/lang/eval.hpp"
#include "kuifje/lang/parser.hpp"
#include "kuifje/lang/typecheck.hpp"
#include "kuifje/loss/loss.hpp"

namespace kuifje::testutil {

inline CtxPtr ctx_of(const char* decls) { return make_ctx(VarContext(parse_decls(decls))); }

inline TypedProgram typed(const char* text, const CtxPtr& pre) { return typecheck(parse_program(text), pre); }

inline TypedProgram typed(const char* text, const char* decls) { return typed(text, ctx_of(decls)); }

inline Predicate pred(const CtxPtr& ctx, const char* expr) { return pred_from_expr(ctx, *parse_expr(expr)); }

/// MIN of one generator per expression.
inline LossFunction min_of(const CtxPtr& ctx, std::initializer_list<const char*> exprs) {
  std::vector<Predicate> gens;
  for (const char* e : exprs) gens.push_back(pred(ctx, e));
  return LossFunction(ctx, gens);
}

inline std::string corpus(const std::string& rel) { return std::string(KUIFJE_CORPUS_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace kuifje::testutil
