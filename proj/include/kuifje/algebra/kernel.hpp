#pragma once

#include <utility>
#include <vector>

#include "kuifje/algebra/predicate.hpp"

namespace kuifje {

/// A subprobabilistic map src → D≤ dst with rational entries, stored as one
/// sparse row per source state. Rows are sorted by target state, carry only
/// strictly positive entries, and sum to at most 1.
class Kernel {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using Row = std::vector<Entry>;

  /// Merges duplicate targets, drops zeros and validates the rows.
  Kernel(CtxPtr src, CtxPtr dst, std::vector<Row> rows);

  static Kernel identity(CtxPtr ctx);
  /// The point mass at (y, y) in ctx followed by a renamed copy of ctx.
  static Kernel diag(CtxPtr ctx, CtxPtr copy);
  /// Multiplies state x by g(x); g must be finite and ≤ 1.
  static Kernel scaling(const Predicate& g);
  /// The deterministic map x ↦ x restricted to the variables of dst.
  static Kernel projection(CtxPtr src, CtxPtr dst);

  const CtxPtr& src_ptr() const { return src_; }
  const CtxPtr& dst_ptr() const { return dst_; }
  const VarContext& src() const { return *src_; }
  const VarContext& dst() const { return *dst_; }
  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(std::size_t x) const { return rows_[x]; }

  Rational row_sum(std::size_t x) const;
  bool is_total() const;

  /// f^⊺(e)(x) = Σ_y e(y)·f(x)(y).
  Predicate dual_apply(const Predicate& e) const;

  /// Sequential composition: first this, then g.
  Kernel then(const Kernel& g) const;

  /// Restates the kernel over permutations of its contexts.
  Kernel reordered(CtxPtr src, CtxPtr dst) const;

  friend bool operator==(const Kernel& a, const Kernel& b);

 private:
  CtxPtr src_;
  CtxPtr dst_;
  std::vector<Row> rows_;
};

/// (f ⊗ g)(x, w)(y, z) = f(x)(y)·g(w)(z), over concatenated contexts.
Kernel kernel_tensor(const Kernel& f, const Kernel& g);

/// f ∘ g in the dual order: (kernel_compose(f, g))^⊺ = f^⊺ ∘ g^⊺, i.e. g runs after f.
inline Kernel kernel_compose(const Kernel& f, const Kernel& g) { return f.then(g); }

}  // namespace kuifje
