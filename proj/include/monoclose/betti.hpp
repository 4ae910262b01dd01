#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "monoclose/decompose.hpp"
#include "monoclose/error.hpp"
#include "monoclose/exponent.hpp"
#include "monoclose/ideal.hpp"

namespace monoclose {

/// A simplicial complex on the vertex set {0..nvertices-1}; faces are vertex
/// bitmasks. No faces at all is the void complex, {∅} the irrelevant one.
class SimplicialComplex {
public:
  using Face = std::uint64_t;

  SimplicialComplex() = default;

  /// Closes `faces` downward.
  SimplicialComplex(std::size_t nvertices, const std::vector<Face>& faces) : nvertices_(nvertices) {
    if (nvertices_ >= 64)
      throw BudgetExceeded("simplicial complexes are limited to 63 vertices");
    std::set<Face> closed;
    for (Face f : faces) {
      if ((f >> nvertices_) != 0)
        throw DimensionError("face uses a vertex outside the ground set");
      // every submask of f
      for (Face sub = f;; sub = (sub - 1) & f) {
        closed.insert(sub);
        if (sub == 0)
          break;
      }
    }
    faces_.assign(closed.begin(), closed.end());
  }

  static SimplicialComplex void_complex(std::size_t nvertices) {
    return SimplicialComplex(nvertices, {});
  }
  static SimplicialComplex irrelevant(std::size_t nvertices) {
    return SimplicialComplex(nvertices, {Face{0}});
  }
  static SimplicialComplex simplex(std::size_t nvertices) {
    return SimplicialComplex(nvertices, {(Face{1} << nvertices) - 1});
  }

  std::size_t nvertices() const noexcept { return nvertices_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  bool is_void() const noexcept { return faces_.empty(); }
  bool contains(Face f) const { return std::binary_search(faces_.begin(), faces_.end(), f); }

  /// Largest face dimension; -1 for {∅}, -2 for the void complex.
  int dimension() const {
    int d = -2;
    for (Face f : faces_)
      d = std::max(d, std::popcount(f) - 1);
    return d;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  std::size_t nvertices_ = 0;
  std::vector<Face> faces_;
};

namespace detail {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t integer_rank(std::vector<std::vector<Exponent>> m) {
  const std::size_t rows = m.size();
  if (rows == 0)
    return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  Exponent prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k)
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Reduced homology ranks over Q. Entry k is the rank of H̃_{k-1}, for
/// k = 0..dim+1; the void complex yields an empty list.
inline std::vector<std::size_t> homology_ranks(const SimplicialComplex& c) {
  if (c.is_void())
    return {};
  const int dim = c.dimension();
  // faces by cardinality 0..dim+1
  std::vector<std::vector<SimplicialComplex::Face>> by_size(static_cast<std::size_t>(dim) + 2);
  for (auto f : c.faces())
    by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // rank of the boundary map from faces of size k to faces of size k-1
  auto boundary_rank = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k >= by_size.size())
      return 0;
    const auto& src = by_size[k];
    const auto& dst = by_size[k - 1];
    if (src.empty() || dst.empty())
      return 0;
    std::vector<std::vector<Exponent>> mat(dst.size(), std::vector<Exponent>(src.size(), 0));
    for (std::size_t j = 0; j < src.size(); ++j) {
      int sign = 1;
      for (std::size_t v = 0; v < c.nvertices(); ++v) {
        const auto bit = SimplicialComplex::Face{1} << v;
        if (!(src[j] & bit))
          continue;
        const auto face = src[j] & ~bit;
        const auto row = std::lower_bound(dst.begin(), dst.end(), face) - dst.begin();
        mat[static_cast<std::size_t>(row)][j] = sign;
        sign = -sign;
      }
    }
    return detail::integer_rank(std::move(mat));
  };

  std::vector<std::size_t> ranks(by_size.size());
  std::vector<std::size_t> bd(by_size.size() + 1, 0);
  for (std::size_t k = 1; k < by_size.size(); ++k)
    bd[k] = boundary_rank(k);
  for (std::size_t k = 0; k < by_size.size(); ++k)
    ranks[k] = by_size[k].size() - bd[k] - bd[k + 1];
  return ranks;
}

inline constexpr std::uint64_t kDefaultLcmBudget = std::uint64_t{1} << 20;

/// lcm of every non-empty subset of the generators, deduplicated and sorted.
/// Built incrementally; the budget bounds the number of distinct lcms.
inline std::vector<ExponentVector> lcm_degrees(const MonomialIdeal& ideal,
                                               std::uint64_t budget = kDefaultLcmBudget) {
  require_proper_nonzero(ideal, "lcm_degrees");
  std::set<ExponentVector> lattice;
  for (const auto& g : ideal.gens()) {
    std::vector<ExponentVector> fresh{g};
    for (const auto& l : lattice)
      fresh.push_back(lcm(l, g));
    lattice.insert(fresh.begin(), fresh.end());
    if (lattice.size() > budget)
      throw BudgetExceeded("lcm lattice exceeds " + std::to_string(budget) + " elements");
  }
  return {lattice.begin(), lattice.end()};
}

/// K^a(I) = { squarefree b <= a : x^{a-b} ∈ I }.
inline SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const ExponentVector& a) {
  const std::size_t n = ideal.nvars();
  if (a.size() != n)
    throw DimensionError("degree " + a.str() + " does not live in " + std::to_string(n) +
                         " variables");
  if (n >= 64)
    throw BudgetExceeded("upper Koszul complexes are limited to 63 variables");
  SimplicialComplex::Face allowed = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0)
      allowed |= SimplicialComplex::Face{1} << i;

  std::vector<SimplicialComplex::Face> faces;
  for (SimplicialComplex::Face b = allowed;; b = (b - 1) & allowed) {
    std::vector<Exponent> shifted(a.begin(), a.end());
    for (std::size_t i = 0; i < n; ++i)
      if (b & (SimplicialComplex::Face{1} << i))
        shifted[i] -= 1;
    if (contains(ideal, ExponentVector(std::move(shifted))))
      faces.push_back(b);
    if (b == 0)
      break;
  }
  return SimplicialComplex(n, faces);
}

/// Multigraded Betti numbers β_{i,a} of R/I (non-zero entries only).
class BettiTable {
public:
  using Key = std::pair<std::size_t, ExponentVector>;

  void add(std::size_t i, const ExponentVector& degree, std::size_t rank) {
    if (rank != 0)
      entries_[{i, degree}] += rank;
  }

  const std::map<Key, std::size_t>& entries() const noexcept { return entries_; }

  std::size_t at(std::size_t i, const ExponentVector& degree) const {
    auto it = entries_.find({i, degree});
    return it == entries_.end() ? 0 : it->second;
  }

  /// Total Betti numbers β_0, β_1, ..., β_pd.
  std::vector<std::size_t> totals() const {
    std::vector<std::size_t> out;
    for (const auto& [key, rank] : entries_) {
      if (out.size() <= key.first)
        out.resize(key.first + 1, 0);
      out[key.first] += rank;
    }
    return out;
  }

  std::size_t projective_dimension() const {
    std::size_t pd = 0;
    for (const auto& [key, rank] : entries_)
      pd = std::max(pd, key.first);
    return pd;
  }

private:
  std::map<Key, std::size_t> entries_;
};

/// β_{i,a}(R/I) = rank H̃_{i-2}(K^a(I)) for i >= 1, over the lcm lattice.
inline BettiTable betti_table(const MonomialIdeal& ideal, std::uint64_t budget = kDefaultLcmBudget) {
  require_proper_nonzero(ideal, "betti_table");
  BettiTable table;
  table.add(0, ExponentVector(ideal.nvars()), 1);
  for (const auto& a : lcm_degrees(ideal, budget)) {
    const auto ranks = homology_ranks(upper_koszul(ideal, a));
    for (std::size_t k = 0; k < ranks.size(); ++k)
      table.add(k + 1, a, ranks[k]);
  }
  return table;
}

inline std::size_t projective_dimension(const MonomialIdeal& ideal,
                                        std::uint64_t budget = kDefaultLcmBudget) {
  return betti_table(ideal, budget).projective_dimension();
}

/// pd(R/I) = codim(I).
inline bool is_cohen_macaulay(const MonomialIdeal& ideal, std::uint64_t lcm_budget = kDefaultLcmBudget,
                              std::uint64_t component_budget = kDefaultComponentBudget) {
  return projective_dimension(ideal, lcm_budget) == codim(ideal, component_budget);
}

}  // namespace monoclose
