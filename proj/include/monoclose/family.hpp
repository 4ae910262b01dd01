#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monoclose/closure.hpp"
#include "monoclose/error.hpp"
#include "monoclose/exponent.hpp"
#include "monoclose/ideal.hpp"

namespace monoclose {

/// Parameters of the family I_{n,t}: n >= 3 variables, exponent t >= 1.
class FamilyParams {
public:
  FamilyParams(std::size_t n, Exponent t) : n_(n), t_(std::move(t)) {
    if (n_ < 3)
      throw DomainError("family parameter n must be at least 3, got " + std::to_string(n_));
    if (t_ < 1)
      throw DomainError("family parameter t must be at least 1, got " + t_.str());
  }

  std::size_t n() const noexcept { return n_; }
  const Exponent& t() const noexcept { return t_; }

private:
  std::size_t n_;
  Exponent t_;
};

/// e_i: t in every coordinate except a 0 at position i.
inline ExponentVector family_vertex(const FamilyParams& p, std::size_t i) {
  std::vector<Exponent> c(p.n(), p.t());
  c[i] = 0;
  return ExponentVector(std::move(c));
}

inline MonomialIdeal family_ideal(const FamilyParams& p) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < p.n(); ++i)
    gens.push_back(family_vertex(p, i));
  return MonomialIdeal(p.n(), std::move(gens));
}

/// Interior part of Δ_{n,t}: {a ∈ [1..t]^n : Σa = t(n-1)}, lexicographic.
inline std::vector<ExponentVector> delta_interior(const FamilyParams& p) {
  const std::size_t n = p.n();
  const Exponent target = p.t() * (n - 1);
  std::vector<ExponentVector> out;
  std::vector<Exponent> cur(n, 1);
  // depth-first over coordinates with the remaining-sum bounds
  auto rec = [&](auto&& self, std::size_t j, const Exponent& remaining) -> void {
    const std::size_t left = n - j - 1;
    if (j + 1 == n) {
      if (remaining >= 1 && remaining <= p.t()) {
        cur[j] = remaining;
        out.emplace_back(cur);
      }
      return;
    }
    for (Exponent v = 1; v <= p.t(); ++v) {
      const Exponent rest = remaining - v;
      if (rest < Exponent(left))
        break;
      if (rest > p.t() * left)
        continue;
      cur[j] = v;
      self(self, j + 1, rest);
    }
  };
  rec(rec, 0, target);
  return out;
}

/// Δ_{n,t}: the interior points plus the n vertices, canonically sorted.
inline std::vector<ExponentVector> delta_set(const FamilyParams& p) {
  std::vector<ExponentVector> out = delta_interior(p);
  for (std::size_t i = 0; i < p.n(); ++i)
    out.push_back(family_vertex(p, i));
  std::sort(out.begin(), out.end());
  return out;
}

/// Σ_{i∈S} a_i >= t(|S|-1) for every non-empty S ⊆ [n].
inline bool thm1_check(const ExponentVector& a, const FamilyParams& p) {
  const std::size_t n = p.n();
  if (a.size() != n)
    throw DimensionError("point " + a.str() + " does not live in " + std::to_string(n) +
                         " variables");
  if (n >= 8 * sizeof(unsigned long long))
    throw BudgetExceeded("subset check over 2^" + std::to_string(n) + " subsets");
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    Exponent lhs = 0;
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) {
        lhs += a[i];
        ++s;
      }
    if (lhs < p.t() * (s - 1))
      return false;
  }
  return true;
}

/// For a lattice point b of the Newton polyhedron of I_{n,t}, an element of
/// Δ_{n,t} dividing b.
inline ExponentVector reduce_to_delta(const ExponentVector& b, const FamilyParams& p) {
  const std::size_t n = p.n();
  if (b.size() != n)
    throw DimensionError("point " + b.str() + " does not live in " + std::to_string(n) +
                         " variables");
  const MonomialIdeal family = family_ideal(p);
  if (!in_newton_polyhedron(family, b))
    throw DomainError("point " + b.str() + " is outside the Newton polyhedron");

  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector e = family_vertex(p, i);
    if (divides(e, b))
      return e;
  }

  const Exponent& t = p.t();
  std::vector<std::size_t> low, high;
  for (std::size_t i = 0; i < n; ++i)
    (b[i] < t ? low : high).push_back(i);

  std::vector<Exponent> d(n);
  if (high.empty()) {
    // Every coordinate is below t (possible only when t >= n). Then every
    // b_i >= n-1 and b is lowered coordinate by coordinate, never below 1,
    // until the degree is t(n-1).
    Exponent excess = b.degree() - t * (n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      Exponent cut = std::min(excess, Exponent(b[i] - 1));
      d[i] = b[i] - cut;
      excess -= cut;
    }
  } else {
    Exponent low_sum = 0;
    for (std::size_t i : low) {
      d[i] = b[i];
      low_sum += b[i];
    }
    d[high.front()] = t * low.size() - low_sum;
    for (std::size_t k = 1; k < high.size(); ++k)
      d[high[k]] = t;
  }
  ExponentVector out(std::move(d));
  if (!divides(out, b))
    throw Error("reduce_to_delta produced " + out.str() + " not dividing " + b.str());
  return out;
}

/// ±x^exponent; an absent entry is the zero polynomial.
struct SignedMonomial {
  int sign = 1;
  ExponentVector exponent;
};

/// The generator row and the n × (n-1) syzygy matrix of the resolution
/// 0 <- R/I <- R <- R^n <- R^{n-1} <- 0.
struct ResolutionPair {
  std::vector<ExponentVector> gen_row;
  std::vector<std::vector<std::optional<SignedMonomial>>> syzygy_matrix;

  /// True iff every column of gen_row · syzygy_matrix cancels to zero.
  bool product_vanishes() const {
    const std::size_t rows = syzygy_matrix.size();
    if (rows != gen_row.size())
      return false;
    const std::size_t cols = rows ? syzygy_matrix.front().size() : 0;
    for (std::size_t c = 0; c < cols; ++c) {
      std::map<ExponentVector, long long> terms;
      for (std::size_t r = 0; r < rows; ++r) {
        const auto& entry = syzygy_matrix[r][c];
        if (entry)
          terms[entry->exponent + gen_row[r]] += entry->sign;
      }
      for (const auto& [mono, coeff] : terms)
        if (coeff != 0)
          return false;
    }
    return true;
  }
};

inline ResolutionPair resolution_matrices(const FamilyParams& p) {
  const std::size_t n = p.n();
  ResolutionPair out;
  for (std::size_t i = 0; i < n; ++i)
    out.gen_row.push_back(family_vertex(p, i));
  out.syzygy_matrix.assign(n, std::vector<std::optional<SignedMonomial>>(n - 1));
  for (std::size_t c = 0; c + 1 < n; ++c) {
    ExponentVector first(n);
    first.set(0, p.t());
    out.syzygy_matrix[0][c] = SignedMonomial{-1, std::move(first)};
    ExponentVector diag(n);
    diag.set(c + 1, p.t());
    out.syzygy_matrix[c + 1][c] = SignedMonomial{1, std::move(diag)};
  }
  if (!out.product_vanishes())
    throw Error("family syzygies do not cancel");
  return out;
}

/// No variable occurs with the same non-zero exponent in two distinct
/// minimal generators.
inline bool is_strongly_generic(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "is_strongly_generic");
  for (std::size_t i = 0; i < ideal.nvars(); ++i) {
    std::set<Exponent> seen;
    for (const auto& g : ideal.gens())
      if (g[i] != 0 && !seen.insert(g[i]).second)
        return false;
  }
  return true;
}

}  // namespace monoclose
