#include <random>
#include <set>

#include <gtest/gtest.h>

#include "monoclose/betti.hpp"
#include "monoclose/closure.hpp"
#include "monoclose/properties.hpp"
#include "monoclose/verify.hpp"

namespace monoclose {
namespace {

using Face = SimplicialComplex::Face;

MonomialIdeal i32() { return MonomialIdeal(3, {{2, 2, 0}, {2, 0, 2}, {0, 2, 2}}); }

TEST(IntegerRank, Examples) {
  using M = std::vector<std::vector<Exponent>>;
  EXPECT_EQ(detail::integer_rank(M{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(detail::integer_rank(M{{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(detail::integer_rank(M{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), 3u);
  EXPECT_EQ(detail::integer_rank(M{}), 0u);
}

TEST(Homology, SmallComplexes) {
  EXPECT_TRUE(homology_ranks(SimplicialComplex::void_complex(3)).empty());
  EXPECT_EQ(homology_ranks(SimplicialComplex::irrelevant(3)), (std::vector<std::size_t>{1}));
  for (auto r : homology_ranks(SimplicialComplex::simplex(3)))
    EXPECT_EQ(r, 0u);
  // two isolated points: reduced H_0 = 1
  auto points = homology_ranks(SimplicialComplex(2, {Face{1}, Face{2}}));
  ASSERT_GE(points.size(), 2u);
  EXPECT_EQ(points[1], 1u);
  // hollow triangle: reduced H_1 = 1
  auto circle = homology_ranks(SimplicialComplex(3, {Face{3}, Face{5}, Face{6}}));
  ASSERT_GE(circle.size(), 3u);
  EXPECT_EQ(circle[2], 1u);
  EXPECT_EQ(circle[1], 0u);
}

TEST(Homology, DimensionConventions) {
  EXPECT_EQ(SimplicialComplex::void_complex(2).dimension(), -2);
  EXPECT_EQ(SimplicialComplex::irrelevant(2).dimension(), -1);
  EXPECT_EQ(SimplicialComplex::simplex(3).dimension(), 2);
  EXPECT_THROW(SimplicialComplex(2, {Face{4}}), DimensionError);
}

TEST(LcmLattice, FinalExampleBySubsets) {
  const auto ideal = final_example_ideal();
  const auto& g = ideal.gens();
  std::set<ExponentVector> brute;
  for (unsigned mask = 1; mask < (1u << g.size()); ++mask) {
    ExponentVector m(ideal.nvars());
    for (std::size_t i = 0; i < g.size(); ++i)
      if (mask & (1u << i))
        m = lcm(m, g[i]);
    brute.insert(m);
  }
  // x^3yz·y^2w^3 already equals the lcm of all three
  EXPECT_EQ(brute.size(), 6u);
  const auto degrees = lcm_degrees(ideal);
  EXPECT_EQ(std::set<ExponentVector>(degrees.begin(), degrees.end()), brute);
}

TEST(LcmLattice, BudgetExceeded) {
  const auto closure = closure_generators(i32());
  EXPECT_THROW(lcm_degrees(closure, 4), BudgetExceeded);
}

TEST(Betti, I32) {
  const auto table = betti_table(i32());
  EXPECT_EQ(table.at(0, {0, 0, 0}), 1u);
  EXPECT_EQ(table.at(1, {2, 2, 0}), 1u);
  EXPECT_EQ(table.at(2, {2, 2, 2}), 2u);
  EXPECT_EQ(table.at(2, {2, 2, 1}), 0u);
  EXPECT_EQ(table.totals(), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(projective_dimension(i32()), 2u);
  EXPECT_TRUE(is_cohen_macaulay(i32()));
}

TEST(Betti, ClosureOfI32) {
  const auto closure = closure_generators(i32());
  EXPECT_EQ(projective_dimension(closure), 3u);
  EXPECT_FALSE(is_cohen_macaulay(closure));
}

TEST(Betti, Errors) {
  EXPECT_THROW(betti_table(MonomialIdeal::zero(2)), DomainError);
  EXPECT_THROW(betti_table(MonomialIdeal::unit(2)), DomainError);
}

TEST(BettiLaws, RandomIdeals) {
  std::mt19937_64 rng(5);
  for (int c = 0; c < 150; ++c) {
    const auto ideal = properties::random_ideal(rng, 4, 4, 4);
    if (ideal.is_unit())
      continue;
    const BettiTable table = betti_table(ideal);
    const auto totals = table.totals();
    ASSERT_GE(totals.size(), 2u);
    EXPECT_EQ(totals[1], ideal.size());
    const auto pd = table.projective_dimension();
    EXPECT_GE(pd, codim(ideal));
    EXPECT_LE(pd, ideal.nvars());
    if (!embedded_primes(ideal).empty()) {
      EXPECT_FALSE(is_cohen_macaulay(ideal)) << properties::describe(ideal);
    }

    // Σ_i (-1)^i β_{i,a} = Σ_{S : lcm(S) = a} (-1)^{|S|}
    const auto& g = ideal.gens();
    std::map<ExponentVector, long long> taylor;
    for (unsigned mask = 1; mask < (1u << g.size()); ++mask) {
      ExponentVector m(ideal.nvars());
      for (std::size_t i = 0; i < g.size(); ++i)
        if (mask & (1u << i))
          m = lcm(m, g[i]);
      taylor[m] += (std::popcount(mask) % 2) ? -1 : 1;
    }
    std::map<ExponentVector, long long> euler;
    for (const auto& [key, rank] : table.entries())
      if (key.first > 0)
        euler[key.second] += (key.first % 2 ? -1 : 1) * static_cast<long long>(rank);
    for (const auto& [a, v] : taylor)
      EXPECT_EQ(euler[a], v) << properties::describe(ideal) << " at " << a.str();
    for (const auto& [a, v] : euler)
      EXPECT_EQ(taylor[a], v);
  }
}

}  // namespace
}  // namespace monoclose
