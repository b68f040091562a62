#include "kuifje/loss/game_lp.hpp"

#include <stdexcept>

#include "kuifje/errors.hpp"

namespace kuifje {

namespace {

// maximize Σ_j u_j  s.t.  M u ≤ 1, u ≥ 0, with M strictly positive.
// Dictionary: x_B[r] = b[r] - Σ_j d[r][j]·x_N[j],  z = z0 + Σ_j c[j]·x_N[j].
// Variable ids: 0..k-1 structural, k..k+m-1 slacks.
struct Dictionary {
  std::size_t m, k;
  std::vector<std::size_t> basic, nonbasic;
  std::vector<Rational> b, c;
  std::vector<std::vector<Rational>> d;
  Rational z0 = 0;

  explicit Dictionary(std::vector<std::vector<Rational>> mat)
      : m(mat.size()), k(mat.front().size()), b(m, Rational(1)), c(k, Rational(1)), d(std::move(mat)) {
    for (std::size_t j = 0; j < k; ++j) nonbasic.push_back(j);
    for (std::size_t r = 0; r < m; ++r) basic.push_back(k + r);
  }

  void pivot(std::size_t r, std::size_t j) {
    const Rational p = d[r][j];
    b[r] /= p;
    for (std::size_t q = 0; q < k; ++q)
      if (q != j) d[r][q] /= p;
    d[r][j] = Rational(1) / p;

    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || d[i][j] == 0) continue;
      const Rational f = d[i][j];
      b[i] -= f * b[r];
      for (std::size_t q = 0; q < k; ++q)
        if (q != j && d[r][q] != 0) d[i][q] -= f * d[r][q];
      d[i][j] = -f * d[r][j];
    }
    if (c[j] != 0) {
      const Rational f = c[j];
      z0 += f * b[r];
      for (std::size_t q = 0; q < k; ++q)
        if (q != j && d[r][q] != 0) c[q] -= f * d[r][q];
      c[j] = -f * d[r][j];
    }
    std::swap(basic[r], nonbasic[j]);
  }

  void solve() {
    for (;;) {
      // Bland: entering variable of smallest id with positive reduced cost.
      std::size_t j = k;
      for (std::size_t q = 0; q < k; ++q)
        if (c[q] > 0 && (j == k || nonbasic[q] < nonbasic[j])) j = q;
      if (j == k) return;
      std::size_t r = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (d[i][j] <= 0) continue;
        Rational ratio = b[i] / d[i][j];
        if (r == m || ratio < best || (ratio == best && basic[i] < basic[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == m) throw std::logic_error("matrix game LP unbounded");
      pivot(r, j);
    }
  }
};

// Iterated removal of weakly dominated rows (for the maximizer) and columns
// (for the minimizer). Optimal strategies of the reduced game, padded with
// zeros, are optimal in the full game. Ties keep the lower index.
void reduce(const std::vector<std::vector<Rational>>& a, std::vector<std::size_t>& rows,
            std::vector<std::size_t>& cols) {
  auto row_leq = [&](std::size_t r, std::size_t s) {
    for (auto c : cols)
      if (a[r][c] > a[s][c]) return false;
    return true;
  };
  auto col_geq = [&](std::size_t c, std::size_t d) {
    for (auto r : rows)
      if (a[r][c] < a[r][d]) return false;
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < rows.size();) {
      bool drop = false;
      for (std::size_t j = 0; j < rows.size() && !drop; ++j)
        drop = j != i && row_leq(rows[i], rows[j]) && (j < i || !row_leq(rows[j], rows[i]));
      if (drop) {
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
    for (std::size_t i = 0; i < cols.size();) {
      bool drop = false;
      for (std::size_t j = 0; j < cols.size() && !drop; ++j)
        drop = j != i && col_geq(cols[i], cols[j]) && (j < i || !col_geq(cols[j], cols[i]));
      if (drop) {
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      } else {
        ++i;
      }
    }
  }
}

GameSolution solve_reduced(const std::vector<std::vector<Rational>>& a) {
  const std::size_t m = a.size(), k = a.front().size();
  Rational lo = a[0][0];
  for (const auto& row : a)
    for (const auto& x : row)
      if (x < lo) lo = x;
  const Rational shift = Rational(1) - lo;
  std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(k));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t i = 0; i < k; ++i) mat[x][i] = a[x][i] + shift;

  Dictionary dict(std::move(mat));
  dict.solve();

  const Rational& z = dict.z0;  // = 1 / (value + shift) > 0
  GameSolution sol;
  sol.value = Rational(1) / z - shift;
  sol.column.assign(k, Rational(0));
  sol.row.assign(m, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (dict.basic[r] < k) sol.column[dict.basic[r]] = dict.b[r] / z;
  for (std::size_t j = 0; j < k; ++j)
    if (dict.nonbasic[j] >= k) sol.row[dict.nonbasic[j] - k] = -dict.c[j] / z;
  return sol;
}

}  // namespace

GameSolution solve_matrix_game(const std::vector<std::vector<Rational>>& a) {
  if (a.empty() || a.front().empty()) throw DomainError("matrix game needs at least one row and one column");
  const std::size_t m = a.size(), k = a.front().size();
  for (const auto& row : a)
    if (row.size() != k) throw DomainError("ragged matrix game");
  std::vector<std::size_t> rows(m), cols(k);
  for (std::size_t i = 0; i < m; ++i) rows[i] = i;
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  reduce(a, rows, cols);

  std::vector<std::vector<Rational>> sub(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) sub[r][c] = a[rows[r]][cols[c]];
  GameSolution small = solve_reduced(sub);

  GameSolution sol;
  sol.value = small.value;
  sol.column.assign(k, Rational(0));
  sol.row.assign(m, Rational(0));
  for (std::size_t c = 0; c < cols.size(); ++c) sol.column[cols[c]] = small.column[c];
  for (std::size_t r = 0; r < rows.size(); ++r) sol.row[rows[r]] = small.row[r];
  return sol;
}

}  // namespace kuifje
