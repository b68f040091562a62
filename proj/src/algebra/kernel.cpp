#include "kuifje/algebra/kernel.hpp"

#include <algorithm>
#include <map>

#include "kuifje/errors.hpp"

namespace kuifje {

Kernel::Kernel(CtxPtr src, CtxPtr dst, std::vector<Row> rows)
    : src_(std::move(src)), dst_(std::move(dst)), rows_(std::move(rows)) {
  if (rows_.size() != src_->state_count()) throw ContextMismatch("kernel row count does not match source context");
  const std::size_t n = dst_->state_count();
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    Row& r = rows_[x];
    std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Row merged;
    for (auto& [y, p] : r) {
      if (y >= n) throw DomainError("kernel target out of range");
      if (p < 0) throw DomainError("negative kernel entry " + p.str());
      if (!merged.empty() && merged.back().first == y)
        merged.back().second += p;
      else
        merged.emplace_back(y, std::move(p));
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    r = std::move(merged);
    if (row_sum(x) > 1)
      throw DomainError("kernel row at " + src_->state_str(x) + " sums to " + row_sum(x).str() + " > 1");
  }
}

Kernel Kernel::identity(CtxPtr ctx) {
  std::vector<Row> rows(ctx->state_count());
  for (std::size_t x = 0; x < rows.size(); ++x) rows[x].emplace_back(x, Rational(1));
  return Kernel(ctx, ctx, std::move(rows));
}

Kernel Kernel::diag(CtxPtr ctx, CtxPtr copy) {
  if (copy->size() != ctx->size()) throw ContextMismatch("diag: copy has a different shape");
  for (std::size_t i = 0; i < ctx->size(); ++i)
    if (ctx->var(i).domain != copy->var(i).domain) throw ContextMismatch("diag: copy has a different shape");
  auto dst = make_ctx(ctx->concat(*copy));
  std::size_t n = ctx->state_count();
  std::vector<Row> rows(n);
  for (std::size_t x = 0; x < n; ++x) rows[x].emplace_back(x * n + x, Rational(1));
  return Kernel(std::move(ctx), std::move(dst), std::move(rows));
}

Kernel Kernel::scaling(const Predicate& g) {
  std::vector<Row> rows(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g[x] > ExtRat(1)) throw DomainError("scaling factor " + g[x].str() + " exceeds 1");
    if (!g[x].is_zero()) rows[x].emplace_back(x, g[x].value());
  }
  return Kernel(g.ctx_ptr(), g.ctx_ptr(), std::move(rows));
}

Kernel Kernel::projection(CtxPtr src, CtxPtr dst) {
  auto map = projection_map(*src, *dst);
  std::vector<Row> rows(map.size());
  for (std::size_t x = 0; x < map.size(); ++x) rows[x].emplace_back(map[x], Rational(1));
  return Kernel(std::move(src), std::move(dst), std::move(rows));
}

Rational Kernel::row_sum(std::size_t x) const {
  Rational s = 0;
  for (const auto& e : rows_[x]) s += e.second;
  return s;
}

bool Kernel::is_total() const {
  for (std::size_t x = 0; x < rows_.size(); ++x)
    if (row_sum(x) != 1) return false;
  return true;
}

Predicate Kernel::dual_apply(const Predicate& e) const {
  require_same_ctx(e.ctx(), *dst_, "kernel_dual_apply");
  std::vector<ExtRat> out(rows_.size());
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    bool inf = false;
    Rational acc = 0;
    for (const auto& [y, p] : rows_[x]) {
      if (e[y].is_infinite()) {
        inf = true;
        break;
      }
      acc += p * e[y].value();
    }
    out[x] = inf ? ExtRat::infinity() : ExtRat(std::move(acc));
  }
  return Predicate(src_, std::move(out));
}

Kernel Kernel::then(const Kernel& g) const {
  require_same_ctx(*dst_, g.src(), "kernel_compose");
  std::vector<Row> rows(rows_.size());
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [y, p] : rows_[x])
      for (const auto& [z, q] : g.rows_[y]) acc[z] += p * q;
    for (auto& [z, p] : acc) rows[x].emplace_back(z, std::move(p));
  }
  return Kernel(src_, g.dst_, std::move(rows));
}

Kernel Kernel::reordered(CtxPtr src, CtxPtr dst) const {
  if (!src->same_variables(*src_) || !dst->same_variables(*dst_))
    throw ContextMismatch("kernel reorder: contexts are not permutations");
  auto src_map = projection_map(*src, *src_);  // new src state -> old src state
  auto old_to_new = projection_map(*dst_, *dst);  // old dst state -> new dst state
  std::vector<Row> rows(src->state_count());
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (const auto& [y, p] : rows_[src_map[x]]) rows[x].emplace_back(old_to_new[y], p);
  return Kernel(std::move(src), std::move(dst), std::move(rows));
}

bool operator==(const Kernel& a, const Kernel& b) {
  return *a.src_ == *b.src_ && *a.dst_ == *b.dst_ && a.rows_ == b.rows_;
}

Kernel kernel_tensor(const Kernel& f, const Kernel& g) {
  auto src = make_ctx(f.src().concat(g.src()));
  auto dst = make_ctx(f.dst().concat(g.dst()));
  const std::size_t gs = g.src().state_count();
  const std::size_t gd = g.dst().state_count();
  std::vector<Kernel::Row> rows(src->state_count());
  for (std::size_t x = 0; x < f.rows().size(); ++x)
    for (std::size_t w = 0; w < gs; ++w) {
      auto& r = rows[x * gs + w];
      for (const auto& [y, p] : f.row(x))
        for (const auto& [z, q] : g.row(w)) r.emplace_back(y * gd + z, p * q);
    }
  return Kernel(std::move(src), std::move(dst), std::move(rows));
}

}  // namespace kuifje
