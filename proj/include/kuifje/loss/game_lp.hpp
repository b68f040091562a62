#pragma once

#include <vector>

#include "kuifje/algebra/ext_rat.hpp"

namespace kuifje {

/// Solution of the zero-sum game v = min_λ max_x Σ_i A[x][i]·λ_i, where λ
/// ranges over distributions on columns. `row` is an optimal mixed strategy
/// of the maximizing row player, so that Σ_x row[x]·A[x][i] ≥ value for
/// every column i and Σ_i A[x][i]·column[i] ≤ value for every row x.
struct GameSolution {
  Rational value;
  std::vector<Rational> column;
  std::vector<Rational> row;
};

/// Exact simplex (dictionary form, Bland's rule). A must have at least one
/// row and one column, all of the same length.
GameSolution solve_matrix_game(const std::vector<std::vector<Rational>>& a);

}  // namespace kuifje
