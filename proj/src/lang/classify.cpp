#include "kuifje/lang/classify.hpp"

namespace kuifje {

bool contains_kind(const Stmt& p, Stmt::Kind kind) {
  if (p.kind == kind) return true;
  for (const auto& c : p.body)
    if (contains_kind(*c, kind)) return true;
  return false;
}

bool classify_hidden(const Stmt& p) {
  return !contains_kind(p, Stmt::Kind::If) && !contains_kind(p, Stmt::Kind::While) &&
         !contains_kind(p, Stmt::Kind::Print) && !contains_kind(p, Stmt::Kind::Call);
}

bool classify_choiceless(const Stmt& p) {
  return !contains_kind(p, Stmt::Kind::NonDet) && !contains_kind(p, Stmt::Kind::Call);
}

}  // namespace kuifje
