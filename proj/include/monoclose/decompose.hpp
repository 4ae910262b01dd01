#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "monoclose/error.hpp"
#include "monoclose/exponent.hpp"
#include "monoclose/ideal.hpp"

namespace monoclose {

/// A monomial prime, given by the (0-based, increasing) indices of the
/// variables generating it.
struct PrimeSupport {
  std::vector<std::size_t> vars;

  std::size_t size() const noexcept { return vars.size(); }
  bool is_subset_of(const PrimeSupport& other) const {
    return std::includes(other.vars.begin(), other.vars.end(), vars.begin(), vars.end());
  }

  MonomialIdeal to_ideal(const std::vector<std::string>& names) const {
    std::vector<ExponentVector> gens;
    for (std::size_t v : vars) {
      ExponentVector g(names.size());
      g.set(v, 1);
      gens.push_back(std::move(g));
    }
    return MonomialIdeal(names, std::move(gens));
  }

  friend auto operator<=>(const PrimeSupport&, const PrimeSupport&) = default;
};

/// ⟨x_i^{a_i} : a_i > 0⟩. A zero entry means the variable does not occur.
struct IrreducibleComponent {
  ExponentVector powers;

  PrimeSupport radical() const {
    PrimeSupport p;
    for (std::size_t i = 0; i < powers.size(); ++i)
      if (powers[i] != 0)
        p.vars.push_back(i);
    return p;
  }

  MonomialIdeal to_ideal(const std::vector<std::string>& names) const {
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < powers.size(); ++i)
      if (powers[i] != 0) {
        ExponentVector g(powers.size());
        g.set(i, powers[i]);
        gens.push_back(std::move(g));
      }
    return MonomialIdeal(names, std::move(gens));
  }

  /// Containment of irreducible ideals: every x_i^{b_i} of this lies in other.
  bool is_subset_of(const IrreducibleComponent& other) const {
    for (std::size_t i = 0; i < powers.size(); ++i) {
      if (powers[i] == 0)
        continue;
      if (other.powers[i] == 0 || other.powers[i] > powers[i])
        return false;
    }
    return true;
  }

  friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.powers == b.powers;
  }
  // by radical first, then by exponents
  friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    const auto ra = a.radical();
    const auto rb = b.radical();
    if (ra != rb)
      return ra < rb;
    return a.powers < b.powers;
  }
};

struct PrimaryComponent {
  PrimeSupport radical;
  MonomialIdeal ideal;
};

inline constexpr std::uint64_t kDefaultComponentBudget = 100'000;

namespace detail {

class Splitter {
public:
  Splitter(std::size_t nvars, std::uint64_t budget) : nvars_(nvars), budget_(budget) {}

  const std::vector<IrreducibleComponent>& split(const std::vector<ExponentVector>& gens) {
    if (auto it = memo_.find(gens); it != memo_.end())
      return it->second;

    std::vector<IrreducibleComponent> out;
    auto mixed = std::find_if(gens.begin(), gens.end(),
                              [](const ExponentVector& g) { return g.support_size() >= 2; });
    if (mixed == gens.end()) {
      IrreducibleComponent c{ExponentVector(nvars_)};
      for (const auto& g : gens)
        for (std::size_t i = 0; i < nvars_; ++i)
          if (g[i] != 0)
            c.powers.set(i, g[i]);
      charge(1);
      out.push_back(std::move(c));
    } else {
      // I = (I + x_i^{g_i}) ∩ (I + g / x_i^{g_i}), i the lowest variable of g
      const ExponentVector& g = *mixed;
      std::size_t i = 0;
      while (g[i] == 0)
        ++i;
      ExponentVector pure(nvars_);
      pure.set(i, g[i]);
      ExponentVector rest = g;
      rest.set(i, 0);

      auto left = gens;
      left.push_back(std::move(pure));
      auto right = gens;
      right.push_back(std::move(rest));
      out = split(minimalize(std::move(left)));
      const auto& more = split(minimalize(std::move(right)));
      out.insert(out.end(), more.begin(), more.end());
    }
    return memo_.emplace(gens, std::move(out)).first->second;
  }

private:
  void charge(std::uint64_t k) {
    produced_ += k;
    if (produced_ > budget_)
      throw BudgetExceeded("splitting produced more than " + std::to_string(budget_) +
                           " irreducible components");
  }

  std::size_t nvars_;
  std::uint64_t budget_;
  std::uint64_t produced_ = 0;
  std::map<std::vector<ExponentVector>, std::vector<IrreducibleComponent>> memo_;
};

inline void require_decomposable(const MonomialIdeal& ideal, const char* op) {
  require_proper_nonzero(ideal, op);
}

}  // namespace detail

/// Irredundant irreducible decomposition by the splitting algorithm, in
/// canonical order (by radical, then exponents).
inline std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& ideal, std::uint64_t component_budget = kDefaultComponentBudget) {
  detail::require_decomposable(ideal, "irreducible_decomposition");
  detail::Splitter splitter(ideal.nvars(), component_budget);
  std::vector<IrreducibleComponent> parts = splitter.split(ideal.gens());
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

  // Greedy pass in canonical order. For irreducible monomial ideals, Q
  // contains the intersection of the others iff it contains one of them.
  std::vector<bool> dropped(parts.size(), false);
  for (std::size_t q = 0; q < parts.size(); ++q)
    for (std::size_t o = 0; o < parts.size(); ++o)
      if (o != q && !dropped[o] && parts[o].is_subset_of(parts[q])) {
        dropped[q] = true;
        break;
      }
  std::vector<IrreducibleComponent> out;
  for (std::size_t q = 0; q < parts.size(); ++q)
    if (!dropped[q])
      out.push_back(std::move(parts[q]));
  return out;
}

/// Irreducible components grouped by radical and intersected, ordered by
/// radical.
inline std::vector<PrimaryComponent> primary_decomposition(
    const MonomialIdeal& ideal, std::uint64_t component_budget = kDefaultComponentBudget) {
  detail::require_decomposable(ideal, "primary_decomposition");
  std::vector<PrimaryComponent> out;
  for (const auto& c : irreducible_decomposition(ideal, component_budget)) {
    PrimeSupport p = c.radical();
    MonomialIdeal q = c.to_ideal(ideal.vars());
    if (!out.empty() && out.back().radical == p)
      out.back().ideal = intersect(out.back().ideal, q);
    else
      out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

inline std::vector<PrimeSupport> associated_primes(
    const MonomialIdeal& ideal, std::uint64_t component_budget = kDefaultComponentBudget) {
  detail::require_decomposable(ideal, "associated_primes");
  std::vector<PrimeSupport> out;
  for (const auto& c : irreducible_decomposition(ideal, component_budget)) {
    PrimeSupport p = c.radical();
    if (out.empty() || out.back() != p)
      out.push_back(std::move(p));
  }
  return out;
}

namespace detail {

inline std::vector<PrimeSupport> minimal_of(const std::vector<PrimeSupport>& ass) {
  std::vector<PrimeSupport> out;
  for (const auto& p : ass) {
    bool minimal = std::none_of(ass.begin(), ass.end(), [&](const PrimeSupport& q) {
      return q != p && q.is_subset_of(p);
    });
    if (minimal)
      out.push_back(p);
  }
  return out;
}

}  // namespace detail

inline std::vector<PrimeSupport> minimal_primes(
    const MonomialIdeal& ideal, std::uint64_t component_budget = kDefaultComponentBudget) {
  return detail::minimal_of(associated_primes(ideal, component_budget));
}

inline std::vector<PrimeSupport> embedded_primes(
    const MonomialIdeal& ideal, std::uint64_t component_budget = kDefaultComponentBudget) {
  const auto ass = associated_primes(ideal, component_budget);
  const auto minimal = detail::minimal_of(ass);
  std::vector<PrimeSupport> out;
  std::set_difference(ass.begin(), ass.end(), minimal.begin(), minimal.end(),
                      std::back_inserter(out));
  return out;
}

inline std::size_t codim(const MonomialIdeal& ideal,
                         std::uint64_t component_budget = kDefaultComponentBudget) {
  const auto minimal = minimal_primes(ideal, component_budget);
  std::size_t best = ideal.nvars();
  for (const auto& p : minimal)
    best = std::min(best, p.size());
  return best;
}

inline bool is_primary(const MonomialIdeal& ideal,
                       std::uint64_t component_budget = kDefaultComponentBudget) {
  return associated_primes(ideal, component_budget).size() == 1;
}

inline bool is_unmixed(const MonomialIdeal& ideal,
                       std::uint64_t component_budget = kDefaultComponentBudget) {
  const auto ass = associated_primes(ideal, component_budget);
  return std::all_of(ass.begin(), ass.end(),
                     [&](const PrimeSupport& p) { return p.size() == ass.front().size(); });
}

}  // namespace monoclose
