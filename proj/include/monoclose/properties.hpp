#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monoclose/betti.hpp"
#include "monoclose/closure.hpp"
#include "monoclose/decompose.hpp"
#include "monoclose/ideal.hpp"

namespace monoclose {

/// Seeded randomized checks over small ideals (at most 4 variables,
/// exponents at most 4, at most 4 generators).
namespace properties {

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 0x6d6f6e6f636c6fULL;
inline constexpr std::size_t kDefaultCases = 200;

inline std::string describe(const MonomialIdeal& ideal) {
  std::string s = "<";
  for (std::size_t i = 0; i < ideal.size(); ++i)
    s += (i ? "," : "") + ideal.gens()[i].str();
  return s + ">";
}

/// A proper, non-zero ideal.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t max_vars = 4, int max_exp = 4,
                                  std::size_t max_gens = 4) {
  std::uniform_int_distribution<std::size_t> nvars(1, max_vars);
  std::uniform_int_distribution<std::size_t> ngens(1, max_gens);
  std::uniform_int_distribution<int> exp(0, max_exp);
  const std::size_t n = nvars(rng);
  std::vector<ExponentVector> gens;
  const std::size_t k = ngens(rng);
  while (gens.size() < k) {
    std::vector<Exponent> c(n);
    for (auto& x : c)
      x = exp(rng);
    ExponentVector g(std::move(c));
    if (!g.is_zero())
      gens.push_back(std::move(g));
  }
  return MonomialIdeal(n, std::move(gens));
}

/// A primary ideal: pure powers of every variable in a random support plus
/// extra monomials in those variables only.
inline MonomialIdeal random_primary_ideal(std::mt19937_64& rng, std::size_t max_vars = 4,
                                          int max_exp = 4, std::size_t max_extra = 3) {
  std::uniform_int_distribution<std::size_t> nvars(1, max_vars);
  std::uniform_int_distribution<int> power(1, max_exp);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<std::size_t> extra(0, max_extra);
  std::bernoulli_distribution coin(0.5);
  const std::size_t n = nvars(rng);
  std::vector<std::size_t> support;
  while (support.empty())
    for (std::size_t i = 0; i < n; ++i)
      if (coin(rng))
        support.push_back(i);
  std::vector<ExponentVector> gens;
  for (std::size_t i : support) {
    ExponentVector g(n);
    g.set(i, power(rng));
    gens.push_back(std::move(g));
  }
  for (std::size_t k = extra(rng); k > 0; --k) {
    ExponentVector g(n);
    for (std::size_t i : support)
      g.set(i, exp(rng));
    if (!g.is_zero())
      gens.push_back(std::move(g));
  }
  return MonomialIdeal(n, std::move(gens));
}

namespace detail {

using Check = std::function<std::optional<std::string>(const MonomialIdeal&)>;

inline Outcome run(const std::string& name, std::uint64_t seed, std::size_t cases, bool primary,
                   const Check& check) {
  Outcome out{name, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    const MonomialIdeal ideal = primary ? random_primary_ideal(rng) : random_ideal(rng);
    ++out.cases;
    std::optional<std::string> failure;
    try {
      failure = check(ideal);
    } catch (const std::exception& e) {
      failure = std::string("threw: ") + e.what();
    }
    if (failure) {
      if (out.failures++ == 0)
        out.first_failure = describe(ideal) + ": " + *failure;
    }
  }
  return out;
}

template <typename F>
void for_each_box_point(const ExponentVector& box, F&& f) {
  std::vector<Exponent> cursor(box.size(), 0);
  do
    f(ExponentVector(cursor));
  while (monoclose::detail::next_in_box(cursor, box));
}

}  // namespace detail

inline Outcome closure_idempotent(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases) {
  return detail::run("closure-idempotent", seed, cases, false,
                     [](const MonomialIdeal& i) -> std::optional<std::string> {
                       const auto c = closure_generators(i);
                       if (closure_generators(c) != c)
                         return "closure of the closure differs";
                       return std::nullopt;
                     });
}

inline Outcome closure_contains_ideal(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases) {
  return detail::run("ideal-inside-closure", seed, cases, false,
                     [](const MonomialIdeal& i) -> std::optional<std::string> {
                       if (!is_subset(i, closure_generators(i)))
                         return "I is not contained in its closure";
                       return std::nullopt;
                     });
}

inline Outcome closure_preserves_radical(std::uint64_t seed = kDefaultSeed,
                                         std::size_t cases = kDefaultCases) {
  return detail::run("closure-same-radical", seed, cases, false,
                     [](const MonomialIdeal& i) -> std::optional<std::string> {
                       if (radical(i) != radical(closure_generators(i)))
                         return "radicals differ";
                       return std::nullopt;
                     });
}

inline Outcome closure_preserves_primary(std::uint64_t seed = kDefaultSeed,
                                         std::size_t cases = kDefaultCases) {
  return detail::run("primary-closure-primary", seed, cases, true,
                     [](const MonomialIdeal& i) -> std::optional<std::string> {
                       if (!is_primary(i))
                         return "generator produced a non-primary ideal";
                       const auto c = closure_generators(i);
                       if (!is_primary(c))
                         return "closure is not primary";
                       if (associated_primes(c) != associated_primes(i))
                         return "closure changed the associated prime";
                       return std::nullopt;
                     });
}

inline Outcome decomposition_reconstructs(std::uint64_t seed = kDefaultSeed,
                                          std::size_t cases = kDefaultCases) {
  return detail::run(
      "decomposition-reconstructs", seed, cases, false, [](const MonomialIdeal& i) -> std::optional<std::string> {
        const auto parts = irreducible_decomposition(i);
        std::vector<MonomialIdeal> ideals;
        for (const auto& p : parts)
          ideals.push_back(p.to_ideal(i.vars()));
        if (intersect_all(ideals) != i)
          return "irreducible components do not intersect back to I";
        for (std::size_t drop = 0; drop < ideals.size() && ideals.size() > 1; ++drop) {
          std::vector<MonomialIdeal> rest;
          for (std::size_t k = 0; k < ideals.size(); ++k)
            if (k != drop)
              rest.push_back(ideals[k]);
          if (intersect_all(rest) == i)
            return "component " + std::to_string(drop) + " is redundant";
        }
        std::vector<MonomialIdeal> primaries;
        for (const auto& q : primary_decomposition(i))
          primaries.push_back(q.ideal);
        if (intersect_all(primaries) != i)
          return "primary components do not intersect back to I";
        return std::nullopt;
      });
}

inline Outcome certificates_verify(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases) {
  return detail::run("certificates-verify", seed, cases, false,
                     [](const MonomialIdeal& i) -> std::optional<std::string> {
                       std::optional<std::string> bad;
                       detail::for_each_box_point(bounding_box(i), [&](const ExponentVector& a) {
                         if (!bad && !verify_certificate(i, a, np_membership(i, a)))
                           bad = "certificate at " + a.str() + " does not verify";
                       });
                       return bad;
                     });
}

/// power_witness succeeds with k = certificate denominator exactly when the
/// LP says Inside; it finds nothing up to the default cap when Outside.
inline Outcome power_witness_agrees(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases) {
  return detail::run("power-witness-agrees", seed, cases, false,
                     [](const MonomialIdeal& i) -> std::optional<std::string> {
                       std::optional<std::string> bad;
                       detail::for_each_box_point(bounding_box(i), [&](const ExponentVector& a) {
                         if (bad)
                           return;
                         const auto cert = np_membership(i, a);
                         const std::size_t k = default_power_k_max(cert, SIZE_MAX);
                         const auto found = power_witness(i, a, is_inside(cert) ? k : kPowerWitnessCap);
                         if (is_inside(cert) && !found)
                           bad = "no power witness up to k=" + std::to_string(k) + " at " + a.str();
                         if (!is_inside(cert) && found)
                           bad = "power witness k=" + std::to_string(*found) + " at outside point " + a.str();
                       });
                       return bad;
                     });
}

/// Σ_i (-1)^i β_{i,a}(R/I) equals the Taylor-complex count
/// Σ_{S : lcm(S) = a} (-1)^{|S|} at every multidegree.
inline Outcome euler_characteristic(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases) {
  return detail::run("euler-characteristic", seed, cases, false,
                     [](const MonomialIdeal& i) -> std::optional<std::string> {
                       std::map<ExponentVector, long long> taylor;
                       const auto& gens = i.gens();
                       for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
                         ExponentVector l(i.nvars());
                         int sign = 1;
                         for (std::size_t k = 0; k < gens.size(); ++k)
                           if (mask & (std::size_t{1} << k)) {
                             l = lcm(l, gens[k]);
                             sign = -sign;
                           }
                         taylor[l] += sign;
                       }
                       std::map<ExponentVector, long long> betti;
                       const BettiTable table = betti_table(i);
                       for (const auto& [key, rank] : table.entries())
                         betti[key.second] += (key.first % 2 ? -1 : 1) * static_cast<long long>(rank);
                       for (auto& [deg, v] : taylor)
                         if (betti[deg] != v)
                           return "Euler characteristic mismatch at " + deg.str();
                       for (auto& [deg, v] : betti)
                         if (taylor[deg] != v)
                           return "Euler characteristic mismatch at " + deg.str();
                       return std::nullopt;
                     });
}

inline std::vector<Outcome> run_all(std::uint64_t seed = kDefaultSeed, std::size_t cases = kDefaultCases) {
  return {closure_idempotent(seed, cases),        closure_contains_ideal(seed, cases),
          closure_preserves_radical(seed, cases), closure_preserves_primary(seed, cases),
          decomposition_reconstructs(seed, cases), certificates_verify(seed, cases),
          power_witness_agrees(seed, cases),      euler_characteristic(seed, cases)};
}

}  // namespace properties
}  // namespace monoclose
