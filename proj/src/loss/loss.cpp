#include "kuifje/loss/loss.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "kuifje/errors.hpp"
#include "kuifje/loss/game_lp.hpp"

namespace kuifje {

LossFunction::LossFunction(CtxPtr ctx, std::vector<Predicate> gens) : ctx_(std::move(ctx)), gens_(std::move(gens)) {
  if (gens_.empty()) throw DomainError("a loss function needs at least one generator");
  for (const auto& g : gens_) require_same_ctx(g.ctx(), *ctx_, "loss function");
}

LossFunction LossFunction::embed(const Predicate& e) {
  LossFunction l(e.ctx_ptr(), {e});
  l.canonical_ = true;
  return l;
}

bool LossFunction::is_zero() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Predicate& g) { return g.is_zero(); });
}

std::string LossFunction::str() const {
  if (gens_.size() == 1) return gens_.front().str();
  std::string out = "MIN{";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].str();
  }
  return out + "}";
}

namespace {

void verify_member(const Predicate& e, const LossFunction& loss, const Membership& m) {
  Rational total = 0;
  for (const auto& w : m.weights) {
    if (w < 0) throw std::logic_error("membership certificate has a negative weight");
    total += w;
  }
  if (total != 1) throw std::logic_error("membership certificate weights do not sum to 1");
  for (std::size_t x = 0; x < e.size(); ++x) {
    ExtRat acc(0);
    for (std::size_t i = 0; i < loss.gens().size(); ++i) acc += ExtRat(m.weights[i]) * loss.gens()[i][x];
    if (acc > e[x]) throw std::logic_error("membership certificate violated at " + e.ctx().state_str(x));
  }
}

void verify_separator(const Predicate& e, const LossFunction& loss, const Membership& m) {
  Distribution w{e.ctx_ptr(), m.separator};
  w.validate();
  if (w.mass() != 1) throw std::logic_error("separating distribution is not normalized");
  ExtRat lhs = pred_expect(e, w);
  for (const auto& g : loss.gens())
    if (!(lhs < pred_expect(g, w))) throw std::logic_error("separating distribution does not separate");
}

}  // namespace

Membership loss_member_certified(const Predicate& e, const LossFunction& loss) {
  require_same_ctx(e.ctx(), loss.ctx(), "loss_member");
  const auto& gens = loss.gens();
  const std::size_t n = e.size(), k = gens.size();
  Membership out;

  for (std::size_t i = 0; i < k; ++i)
    if (pred_leq(gens[i], e)) {
      out.member = true;
      out.weights.assign(k, Rational(0));
      out.weights[i] = 1;
      return out;
    }

  std::vector<std::size_t> rows;
  for (std::size_t x = 0; x < n; ++x)
    if (e[x].is_finite()) rows.push_back(x);

  std::vector<std::size_t> usable;
  std::vector<std::size_t> inf_states;  // one ∞ state per excluded generator
  for (std::size_t i = 0; i < k; ++i) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](std::size_t x) { return gens[i][x].is_infinite(); });
    if (it == rows.end())
      usable.push_back(i);
    else if (std::find(inf_states.begin(), inf_states.end(), *it) == inf_states.end())
      inf_states.push_back(*it);
  }

  std::vector<Rational> sep(n, Rational(0));
  if (usable.empty()) {
    for (auto x : inf_states) sep[x] = Rational(1, static_cast<long>(inf_states.size()));
    out.separator = std::move(sep);
    verify_separator(e, loss, out);
    return out;
  }

  // Rows where no usable generator exceeds e cannot make the value positive.
  std::erase_if(rows, [&](std::size_t x) {
    return std::none_of(usable.begin(), usable.end(), [&](std::size_t i) { return gens[i][x] > e[x]; });
  });
  std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(usable.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < usable.size(); ++c) a[r][c] = gens[usable[c]][rows[r]].value() - e[rows[r]].value();
  GameSolution game = solve_matrix_game(a);

  if (game.value <= 0) {
    out.member = true;
    out.weights.assign(k, Rational(0));
    for (std::size_t c = 0; c < usable.size(); ++c) out.weights[usable[c]] = game.column[c];
    verify_member(e, loss, out);
    return out;
  }

  for (std::size_t r = 0; r < rows.size(); ++r) sep[rows[r]] = game.row[r];
  if (!inf_states.empty()) {
    // Mix in a little weight on states where the excluded generators are ∞,
    // small enough to keep the finite gaps positive.
    Rational q = Rational(1, static_cast<long>(inf_states.size()));
    Rational e_on_q = 0;
    for (auto x : inf_states) e_on_q += q * e[x].value();
    Rational eps;
    bool first = true;
    for (auto i : usable) {
      Rational gap = 0;
      for (std::size_t r = 0; r < rows.size(); ++r)
        gap += game.row[r] * (gens[i][rows[r]].value() - e[rows[r]].value());
      Rational cand = gap / (2 * (gap + e_on_q + 1));
      if (first || cand < eps) eps = cand;
      first = false;
    }
    for (auto& w : sep) w *= (1 - eps);
    for (auto x : inf_states) sep[x] += eps * q;
  }
  out.separator = std::move(sep);
  verify_separator(e, loss, out);
  return out;
}

bool loss_member(const Predicate& e, const LossFunction& loss) { return loss_member_certified(e, loss).member; }

RefinementCheck loss_refines_certified(const LossFunction& e1, const LossFunction& e2) {
  require_same_ctx(e1.ctx(), e2.ctx(), "loss_refines");
  RefinementCheck out;
  for (std::size_t j = 0; j < e2.gens().size(); ++j) {
    Membership m = loss_member_certified(e2.gens()[j], e1);
    if (!m.member) {
      out.holds = false;
      out.failing = j;
      out.witness = Distribution{e1.ctx_ptr(), std::move(m.separator)};
      return out;
    }
  }
  return out;
}

bool loss_refines(const LossFunction& e1, const LossFunction& e2) { return loss_refines_certified(e1, e2).holds; }

bool loss_equal(const LossFunction& e1, const LossFunction& e2) {
  return loss_refines(e1, e2) && loss_refines(e2, e1);
}

LossFunction loss_canonicalize(const LossFunction& e) {
  if (e.canonical()) return e;
  std::vector<Predicate> gens = e.gens();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // Small totals first: the minimizer of the uniform weighting is a vertex.
  // A candidate in the closure of the kept set is redundant overall; the
  // kept set only grows, so one final pass makes it irredundant.
  auto total = [](const Predicate& g) {
    ExtRat t(0);
    for (const auto& x : g.entries()) t += x;
    return t;
  };
  std::vector<std::pair<ExtRat, std::size_t>> order;
  for (std::size_t i = 0; i < gens.size(); ++i) order.emplace_back(total(gens[i]), i);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  // Cheap non-membership certificates first: a state where c is strictly
  // below every other generator, or a recent LP separator that still works.
  std::deque<std::vector<Rational>> separators;
  auto weighted = [](const std::vector<Rational>& w, const Predicate& g) {
    ExtRat acc(0);
    for (std::size_t x = 0; x < w.size(); ++x)
      if (w[x] != 0) acc += ExtRat(w[x]) * g[x];
    return acc;
  };
  auto separated = [&](const Predicate& c, const std::vector<const Predicate*>& others) {
    for (std::size_t x = 0; x < c.size(); ++x)
      if (std::all_of(others.begin(), others.end(), [&](const Predicate* o) { return c[x] < (*o)[x]; })) return true;
    for (const auto& w : separators) {
      const ExtRat wc = weighted(w, c);
      if (std::all_of(others.begin(), others.end(), [&](const Predicate* o) { return wc < weighted(w, *o); }))
        return true;
    }
    return false;
  };
  auto member_of_others = [&](const Predicate& c, const std::vector<Predicate>& kept, std::size_t skip) {
    std::vector<const Predicate*> others;
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (i != skip) others.push_back(&kept[i]);
    if (others.empty()) return false;
    for (const auto* o : others)
      if (pred_leq(*o, c)) return true;
    if (others.size() == 1 || separated(c, others)) return false;
    std::vector<Predicate> gens_o;
    for (const auto* o : others) gens_o.push_back(*o);
    Membership m = loss_member_certified(c, LossFunction(e.ctx_ptr(), std::move(gens_o)));
    if (!m.member) {
      separators.push_front(std::move(m.separator));
      if (separators.size() > 8) separators.pop_back();
    }
    return m.member;
  };

  std::vector<Predicate> kept;
  for (const auto& [t, i] : order) {
    const Predicate& c = gens[i];
    if (member_of_others(c, kept, kept.size())) continue;
    std::erase_if(kept, [&](const Predicate& v) { return pred_leq(c, v); });
    kept.push_back(c);
  }
  if (kept.size() >= 3)
    for (std::size_t j = 0; j < kept.size();) {
      if (member_of_others(kept[j], kept, j))
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(j));
      else
        ++j;
    }
  std::sort(kept.begin(), kept.end());
  LossFunction out(e.ctx_ptr(), std::move(kept));
  out.canonical_ = true;
  return out;
}


namespace {

// States where the generators do not all agree.
std::vector<bool> varying(const LossFunction& e) {
  std::vector<bool> out(e.ctx().state_count(), false);
  const auto& gens = e.gens();
  for (std::size_t x = 0; x < out.size(); ++x)
    for (std::size_t i = 1; i < gens.size() && !out[x]; ++i) out[x] = gens[i][x] != gens[0][x];
  return out;
}

// Canonical summands that vary on disjoint, finite parts of the state space:
// the sum is the product of the two polytopes, whose vertices are the pairwise sums.
bool independent(const LossFunction& e1, const LossFunction& e2) {
  if (!e1.canonical() || !e2.canonical()) return false;
  auto v1 = varying(e1), v2 = varying(e2);
  for (std::size_t x = 0; x < v1.size(); ++x) {
    if (v1[x] && v2[x]) return false;
    if (v1[x] && e2.gens()[0][x].is_infinite()) return false;
    if (v2[x] && e1.gens()[0][x].is_infinite()) return false;
  }
  return true;
}

}  // namespace

LossFunction loss_add(const LossFunction& e1, const LossFunction& e2) {
  require_same_ctx(e1.ctx(), e2.ctx(), "loss_add");
  std::vector<Predicate> gens;
  for (const auto& a : e1.gens())
    for (const auto& b : e2.gens()) gens.push_back(pred_add(a, b));
  if (independent(e1, e2)) {
    std::sort(gens.begin(), gens.end());
    LossFunction out(e1.ctx_ptr(), std::move(gens));
    out.canonical_ = true;
    return out;
  }
  return loss_canonicalize(LossFunction(e1.ctx_ptr(), std::move(gens)));
}

LossFunction loss_scale(const ExtRat& r, const LossFunction& e) {
  std::vector<Predicate> gens;
  for (const auto& g : e.gens()) gens.push_back(pred_scale(r, g));
  return loss_canonicalize(LossFunction(e.ctx_ptr(), std::move(gens)));
}

LossFunction loss_min(const LossFunction& e1, const LossFunction& e2) {
  require_same_ctx(e1.ctx(), e2.ctx(), "loss_min");
  std::vector<Predicate> gens = e1.gens();
  gens.insert(gens.end(), e2.gens().begin(), e2.gens().end());
  return loss_canonicalize(LossFunction(e1.ctx_ptr(), std::move(gens)));
}

LossFunction loss_map(const Kernel& f, const LossFunction& e) {
  require_same_ctx(f.dst(), e.ctx(), "loss_map");
  std::vector<Predicate> gens;
  for (const auto& g : e.gens()) gens.push_back(f.dual_apply(g));
  return loss_canonicalize(LossFunction(f.src_ptr(), std::move(gens)));
}

LossFunction loss_conj(const Predicate& e, const LossFunction& loss) {
  require_same_ctx(e.ctx(), loss.ctx(), "loss_conj");
  std::vector<Predicate> gens;
  for (const auto& g : loss.gens()) gens.push_back(pred_conj(e, g));
  return loss_canonicalize(LossFunction(loss.ctx_ptr(), std::move(gens)));
}

ExtRat eval_loss(const LossFunction& loss, const Distribution& d) {
  require_same_ctx(loss.ctx(), *d.ctx, "eval_loss");
  ExtRat best = pred_expect(loss.gens().front(), d);
  for (std::size_t i = 1; i < loss.gens().size(); ++i) best = std::min(best, pred_expect(loss.gens()[i], d));
  return best;
}

LossFunction loss_reorder(const LossFunction& e, const CtxPtr& target) {
  if (*target == e.ctx()) return e;
  std::vector<Predicate> gens;
  for (const auto& g : e.gens()) gens.push_back(pred_reorder(g, target));
  return loss_canonicalize(LossFunction(target, std::move(gens)));
}

LossFunction loss_lift(const LossFunction& e, const CtxPtr& target) {
  if (*target == e.ctx()) return e;
  std::vector<Predicate> gens;
  for (const auto& g : e.gens()) gens.push_back(pred_lift(g, target));
  return loss_canonicalize(LossFunction(target, std::move(gens)));
}

}  // namespace kuifje
