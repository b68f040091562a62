#include "kuifje/algebra/predicate.hpp"

#include "kuifje/errors.hpp"

namespace kuifje {

Predicate::Predicate(CtxPtr ctx, std::vector<ExtRat> entries) : ctx_(std::move(ctx)), entries_(std::move(entries)) {
  if (entries_.size() != ctx_->state_count())
    throw ContextMismatch("predicate has " + std::to_string(entries_.size()) + " entries for " +
                          std::to_string(ctx_->state_count()) + " states");
}

Predicate Predicate::zero(CtxPtr ctx) { return constant(std::move(ctx), ExtRat(0)); }
Predicate Predicate::ones(CtxPtr ctx) { return constant(std::move(ctx), ExtRat(1)); }

Predicate Predicate::constant(CtxPtr ctx, const ExtRat& r) {
  std::size_t n = ctx->state_count();
  return Predicate(std::move(ctx), std::vector<ExtRat>(n, r));
}

Predicate Predicate::point(CtxPtr ctx, std::size_t state) {
  std::vector<ExtRat> v(ctx->state_count());
  v.at(state) = 1;
  return Predicate(std::move(ctx), std::move(v));
}

Predicate Predicate::from(CtxPtr ctx, const std::function<ExtRat(std::size_t)>& f) {
  std::vector<ExtRat> v(ctx->state_count());
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = f(s);
  return Predicate(std::move(ctx), std::move(v));
}

bool Predicate::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

bool Predicate::is_finite() const {
  for (const auto& x : entries_)
    if (x.is_infinite()) return false;
  return true;
}

std::string Predicate::str() const {
  std::string out = "[";
  bool first = true;
  for (std::size_t s = 0; s < entries_.size(); ++s) {
    if (entries_[s].is_zero()) continue;
    if (!first) out += ", ";
    first = false;
    out += ctx_->state_str(s) + "=" + entries_[s].str();
  }
  return out + "]";
}

bool operator==(const Predicate& a, const Predicate& b) {
  return (a.ctx_ == b.ctx_ || *a.ctx_ == *b.ctx_) && a.entries_ == b.entries_;
}

Distribution Distribution::point(CtxPtr ctx, std::size_t state) {
  std::vector<Rational> w(ctx->state_count());
  w.at(state) = 1;
  return {std::move(ctx), std::move(w)};
}

Distribution Distribution::uniform(CtxPtr ctx) {
  std::size_t n = ctx->state_count();
  return {std::move(ctx), std::vector<Rational>(n, Rational(1, static_cast<long>(n)))};
}

Rational Distribution::mass() const {
  Rational m = 0;
  for (const auto& w : weights) m += w;
  return m;
}

void Distribution::validate() const {
  if (weights.size() != ctx->state_count()) throw ContextMismatch("distribution size does not match its context");
  for (const auto& w : weights)
    if (w < 0) throw DomainError("negative probability " + w.str());
  if (mass() > 1) throw DomainError("distribution mass " + mass().str() + " exceeds 1");
}

std::string Distribution::str() const {
  std::string out;
  for (std::size_t s = 0; s < weights.size(); ++s) {
    if (weights[s] == 0) continue;
    if (!out.empty()) out += " ";
    out += ctx->state_str(s) + "=" + weights[s].str();
  }
  return out;
}

void require_same_ctx(const VarContext& a, const VarContext& b, const char* op) {
  if (!(a == b)) throw ContextMismatch(std::string(op) + ": contexts [" + a.str() + "] and [" + b.str() + "] differ");
}

Predicate pred_add(const Predicate& a, const Predicate& b) {
  require_same_ctx(a.ctx(), b.ctx(), "pred_add");
  std::vector<ExtRat> v(a.size());
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = a[s] + b[s];
  return Predicate(a.ctx_ptr(), std::move(v));
}

Predicate pred_scale(const ExtRat& r, const Predicate& e) {
  std::vector<ExtRat> v(e.size());
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = r * e[s];
  return Predicate(e.ctx_ptr(), std::move(v));
}

Predicate pred_conj(const Predicate& a, const Predicate& b) {
  require_same_ctx(a.ctx(), b.ctx(), "pred_conj");
  std::vector<ExtRat> v(a.size());
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = a[s] * b[s];
  return Predicate(a.ctx_ptr(), std::move(v));
}

Predicate pred_complement(const Predicate& e) {
  std::vector<ExtRat> v(e.size());
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (e[s] > ExtRat(1))
      throw DomainError("complement of entry " + e[s].str() + " > 1 at " + e.ctx().state_str(s));
    v[s] = ExtRat(Rational(1) - e[s].value());
  }
  return Predicate(e.ctx_ptr(), std::move(v));
}

Predicate pred_extend(const Predicate& e, const VarContext& extra) {
  return pred_lift(e, make_ctx(e.ctx().concat(extra)));
}

Predicate pred_lift(const Predicate& e, const CtxPtr& target) {
  auto map = projection_map(*target, e.ctx());
  std::vector<ExtRat> v(map.size());
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = e[map[s]];
  return Predicate(target, std::move(v));
}

Predicate pred_reorder(const Predicate& e, const CtxPtr& target) {
  if (!target->same_variables(e.ctx()))
    throw ContextMismatch("cannot reorder [" + e.ctx().str() + "] as [" + target->str() + "]");
  return pred_lift(e, target);
}

bool pred_leq(const Predicate& a, const Predicate& b) {
  require_same_ctx(a.ctx(), b.ctx(), "pred_leq");
  for (std::size_t s = 0; s < a.size(); ++s)
    if (a[s] > b[s]) return false;
  return true;
}

ExtRat pred_expect(const Predicate& e, const Distribution& d) {
  require_same_ctx(e.ctx(), *d.ctx, "expectation");
  ExtRat total(0);
  for (std::size_t s = 0; s < e.size(); ++s) {
    if (d.weights[s] == 0) continue;
    total += e[s] * ExtRat(d.weights[s]);
  }
  return total;
}

}  // namespace kuifje
