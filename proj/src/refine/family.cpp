#include "kuifje/refine/family.hpp"

#include "kuifje/errors.hpp"

namespace kuifje {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Builtin: return "builtin-atomic";
    case Provenance::Witness: return "witness";
    case Provenance::User: return "user";
    case Provenance::Random: return "random";
  }
  return "?";
}

namespace {

// Visits every subset of {0..n-1} of size k in lexicographic order.
template <typename F>
void for_subsets(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  long double c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
  return static_cast<std::size_t>(c + 0.5L);
}

std::string state_label(const VarContext& ctx, std::size_t s) { return ctx.state_str(s); }

}  // namespace

LossFunction random_loss(const CtxPtr& ctx, std::mt19937_64& rng, int max_gens) {
  const std::size_t gens = 1 + rand_below(rng, static_cast<std::size_t>(max_gens));
  std::vector<Predicate> out;
  for (std::size_t g = 0; g < gens; ++g) {
    std::vector<ExtRat> entries;
    for (std::size_t x = 0; x < ctx->state_count(); ++x) {
      const long den = 1 + static_cast<long>(rand_below(rng, 4));
      const long num = static_cast<long>(rand_below(rng, static_cast<std::size_t>(2 * den + 1)));
      entries.emplace_back(Rational(num, den));
    }
    out.emplace_back(ctx, std::move(entries));
  }
  return loss_canonicalize(LossFunction(ctx, std::move(out)));
}

TestFamily standard_family(const CtxPtr& ctx, const FamilyOptions& opts) {
  const std::size_t n = ctx->state_count();
  const std::size_t k = static_cast<std::size_t>(std::max(opts.max_subset, 1));
  std::size_t planned = 2 * n + 2 + static_cast<std::size_t>(std::max(opts.random, 0));
  for (std::size_t s = 2; s <= k && s <= n; ++s) planned += 2 * choose(n, s);
  if (planned > opts.max_entries)
    throw DomainError("test family over [" + ctx->str() + "] would have " + std::to_string(planned) +
                      " entries, above the cap of " + std::to_string(opts.max_entries));

  TestFamily f{ctx, {}};
  auto add = [&](LossFunction l, Provenance p, std::string label) {
    f.entries.push_back({std::move(l), p, std::move(label)});
  };
  for (std::size_t s = 0; s < n; ++s)
    add(LossFunction::embed(Predicate::point(ctx, s)), Provenance::Builtin, "[[" + state_label(*ctx, s) + "]]");
  add(LossFunction::ones(ctx), Provenance::Builtin, "1");
  for (std::size_t s = 0; s < n; ++s)
    add(LossFunction::embed(pred_complement(Predicate::point(ctx, s))), Provenance::Builtin,
        "not [[" + state_label(*ctx, s) + "]]");
  for (std::size_t size = 2; size <= k && size <= n; ++size) {
    for_subsets(n, size, [&](const std::vector<std::size_t>& idx) {
      std::vector<ExtRat> ind(n, ExtRat(0));
      std::vector<Predicate> points;
      std::string names;
      for (std::size_t s : idx) {
        ind[s] = ExtRat(1);
        points.push_back(Predicate::point(ctx, s));
        names += (names.empty() ? "" : ",") + state_label(*ctx, s);
      }
      add(LossFunction::embed(Predicate(ctx, ind)), Provenance::Builtin, "[[in {" + names + "}]]");
      add(LossFunction(ctx, points), Provenance::Builtin, "MIN singletons {" + names + "}");
    });
  }
  if (n > 1) {
    std::vector<Predicate> points;
    for (std::size_t s = 0; s < n; ++s) points.push_back(Predicate::point(ctx, s));
    add(LossFunction(ctx, points), Provenance::Builtin, "MIN all singletons");
  }
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < opts.random; ++i)
    add(random_loss(ctx, rng), Provenance::Random,
        "random #" + std::to_string(i) + " (seed " + std::to_string(opts.seed) + ")");
  return f;
}

TestFamily FamilySpec::build(const CtxPtr& ctx) const {
  TestFamily std_f = standard_family(ctx, options);
  TestFamily f{ctx, {}};
  for (const auto& e : extra)
    if (e.loss.ctx().same_variables(*ctx)) f.entries.push_back({loss_reorder(e.loss, ctx), e.provenance, e.label});
  for (auto& e : std_f.entries) f.entries.push_back(std::move(e));
  return f;
}

}  // namespace kuifje
