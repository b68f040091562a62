#include "kuifje/lang/ast.hpp"

namespace kuifje {

namespace {

ExprPtr make_expr(Expr::Kind kind, std::string op, std::vector<ExprPtr> args, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->op = std::move(op);
  e->args = std::move(args);
  e->pos = pos;
  return e;
}

std::shared_ptr<Stmt> make_stmt(Stmt::Kind kind, SourcePos pos) {
  auto s = std::make_shared<Stmt>();
  s->kind = kind;
  s->pos = pos;
  return s;
}

}  // namespace

ExprPtr Expr::make_number(Rational v, SourcePos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->number = std::move(v);
  e->pos = pos;
  return e;
}

ExprPtr Expr::make_name(std::string name, SourcePos pos) { return make_expr(Kind::Name, std::move(name), {}, pos); }

ExprPtr Expr::make_unary(std::string op, ExprPtr a, SourcePos pos) {
  return make_expr(Kind::Unary, std::move(op), {std::move(a)}, pos);
}

ExprPtr Expr::make_binary(std::string op, ExprPtr a, ExprPtr b, SourcePos pos) {
  return make_expr(Kind::Binary, std::move(op), {std::move(a), std::move(b)}, pos);
}

ExprPtr Expr::make_call(std::string fn, std::vector<ExprPtr> args, SourcePos pos) {
  return make_expr(Kind::Call, std::move(fn), std::move(args), pos);
}

ExprPtr Expr::make_array(std::vector<ExprPtr> items, SourcePos pos) {
  return make_expr(Kind::Array, "", std::move(items), pos);
}

ExprPtr Expr::make_tuple(std::vector<ExprPtr> items, SourcePos pos) {
  return make_expr(Kind::Tuple, "", std::move(items), pos);
}

ExprPtr Expr::make_index(ExprPtr array, ExprPtr index, SourcePos pos) {
  return make_expr(Kind::Index, "", {std::move(array), std::move(index)}, pos);
}

bool same_expr(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.op != b.op || a.args.size() != b.args.size()) return false;
  if (a.kind == Expr::Kind::Number && a.number != b.number) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_expr(*a.args[i], *b.args[i])) return false;
  return true;
}

bool same_dist(const DistExpr& a, const DistExpr& b) {
  if (a.branches.size() != b.branches.size()) return false;
  for (std::size_t i = 0; i < a.branches.size(); ++i)
    if (a.branches[i].weight != b.branches[i].weight || !same_expr(*a.branches[i].expr, *b.branches[i].expr))
      return false;
  return true;
}

StmtPtr Stmt::skip(SourcePos pos) { return make_stmt(Kind::Skip, pos); }
StmtPtr Stmt::abort(SourcePos pos) { return make_stmt(Kind::Abort, pos); }

StmtPtr Stmt::seq(std::vector<StmtPtr> items, SourcePos pos) {
  std::vector<StmtPtr> flat;
  for (auto& item : items) {
    if (item->kind == Kind::Seq)
      flat.insert(flat.end(), item->body.begin(), item->body.end());
    else
      flat.push_back(std::move(item));
  }
  if (flat.empty()) return skip(pos);
  if (flat.size() == 1) return flat.front();
  auto s = make_stmt(Kind::Seq, pos);
  s->body = std::move(flat);
  return s;
}

StmtPtr Stmt::assign(std::vector<std::string> targets, DistExpr d, SourcePos pos) {
  auto s = make_stmt(Kind::Assign, pos);
  s->names = std::move(targets);
  s->dist = std::move(d);
  return s;
}

StmtPtr Stmt::hidvar(std::string name, std::optional<std::vector<Value>> domain, DistExpr d, SourcePos pos) {
  auto s = make_stmt(Kind::HidVar, pos);
  s->names = {std::move(name)};
  s->domain = std::move(domain);
  s->dist = std::move(d);
  return s;
}

StmtPtr Stmt::unvar(std::string name, SourcePos pos) {
  auto s = make_stmt(Kind::Unvar, pos);
  s->names = {std::move(name)};
  return s;
}

StmtPtr Stmt::if_(ExprPtr guard, StmtPtr then, StmtPtr otherwise, SourcePos pos) {
  auto s = make_stmt(Kind::If, pos);
  s->guard = std::move(guard);
  s->body = {std::move(then), std::move(otherwise)};
  return s;
}

StmtPtr Stmt::while_(ExprPtr guard, StmtPtr body, SourcePos pos) {
  auto s = make_stmt(Kind::While, pos);
  s->guard = std::move(guard);
  s->body = {std::move(body)};
  return s;
}

StmtPtr Stmt::print(DistExpr d, SourcePos pos) {
  auto s = make_stmt(Kind::Print, pos);
  s->dist = std::move(d);
  return s;
}

StmtPtr Stmt::nondet(StmtPtr left, StmtPtr right, SourcePos pos) {
  auto s = make_stmt(Kind::NonDet, pos);
  s->body = {std::move(left), std::move(right)};
  return s;
}

StmtPtr Stmt::assert_(ExprPtr guard, SourcePos pos) {
  auto s = make_stmt(Kind::Assert, pos);
  s->guard = std::move(guard);
  return s;
}

StmtPtr Stmt::call(std::string op, SourcePos pos) {
  auto s = make_stmt(Kind::Call, pos);
  s->names = {std::move(op)};
  return s;
}

bool same_stmt(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind || a.names != b.names || a.domain != b.domain || a.body.size() != b.body.size()) return false;
  if (!same_dist(a.dist, b.dist)) return false;
  if (bool(a.guard) != bool(b.guard) || (a.guard && !same_expr(*a.guard, *b.guard))) return false;
  for (std::size_t i = 0; i < a.body.size(); ++i)
    if (!same_stmt(*a.body[i], *b.body[i])) return false;
  return true;
}

const StmtPtr* Datatype::op(const std::string& name) const {
  for (const auto& [n, p] : ops)
    if (n == name) return &p;
  return nullptr;
}

}  // namespace kuifje
