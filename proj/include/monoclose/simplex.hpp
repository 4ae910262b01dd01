#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monoclose/error.hpp"

namespace monoclose {

using Rational = boost::multiprecision::cpp_rational;

/// Outcome of a phase-1 feasibility solve of { x >= 0 : A x = b }.
struct FeasibilityResult {
  bool feasible = false;
  /// A basic feasible x when feasible.
  std::vector<Rational> primal;
  /// When infeasible, a Farkas vector y with yᵀA <= 0 and yᵀb > 0.
  std::vector<Rational> farkas;
};

/// Exact phase-1 simplex with Bland's rule. Rows with negative right-hand
/// side are negated up front; the Farkas vector is reported against the
/// caller's original rows.
inline FeasibilityResult solve_feasibility(const std::vector<std::vector<Rational>>& a,
                                           const std::vector<Rational>& b) {
  const std::size_t rows = b.size();
  if (a.size() != rows)
    throw DimensionError("constraint matrix and right-hand side disagree");
  const std::size_t cols = rows ? a.front().size() : 0;
  for (const auto& r : a)
    if (r.size() != cols)
      throw DimensionError("ragged constraint matrix");

  const std::size_t width = cols + rows;  // structural then artificial
  std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(width + 1));
  std::vector<int> sign(rows, 1);
  for (std::size_t i = 0; i < rows; ++i) {
    sign[i] = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < cols; ++j)
      tab[i][j] = sign[i] * a[i][j];
    tab[i][cols + i] = 1;
    tab[i][width] = sign[i] * b[i];
  }

  // reduced costs of the phase-1 objective (sum of artificials)
  std::vector<Rational> cost(width + 1);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      cost[j] -= tab[i][j];
  for (std::size_t i = 0; i < rows; ++i)
    cost[width] -= tab[i][width];

  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i)
    basis[i] = cols + i;

  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < width; ++j)
      if (cost[j] < 0) {
        entering = j;
        break;
      }
    if (!entering)
      break;
    const std::size_t e = *entering;

    std::optional<std::size_t> leaving;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][e] <= 0)
        continue;
      Rational ratio = tab[i][width] / tab[i][e];
      if (!leaving || ratio < best || (ratio == best && basis[i] < basis[*leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    // the phase-1 objective is bounded below by zero
    if (!leaving)
      throw Error("phase-1 simplex reported an unbounded ray");
    const std::size_t l = *leaving;

    const Rational pivot = tab[l][e];
    for (auto& v : tab[l])
      v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == l || tab[i][e] == 0)
        continue;
      const Rational f = tab[i][e];
      for (std::size_t j = 0; j <= width; ++j)
        if (tab[l][j] != 0)
          tab[i][j] -= f * tab[l][j];
    }
    if (cost[e] != 0) {
      const Rational f = cost[e];
      for (std::size_t j = 0; j <= width; ++j)
        if (tab[l][j] != 0)
          cost[j] -= f * tab[l][j];
    }
    basis[l] = e;
  }

  FeasibilityResult result;
  // cost[width] holds minus the objective value
  if (cost[width] == 0) {
    result.feasible = true;
    result.primal.assign(cols, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
      if (basis[i] < cols)
        result.primal[basis[i]] = tab[i][width];
    return result;
  }
  // y_i = c_art - reduced cost of artificial i, undoing the row negation
  result.farkas.resize(rows);
  for (std::size_t i = 0; i < rows; ++i)
    result.farkas[i] = sign[i] * (Rational(1) - cost[cols + i]);
  return result;
}

}  // namespace monoclose
