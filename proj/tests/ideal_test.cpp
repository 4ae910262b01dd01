#include <random>

#include <gtest/gtest.h>

#include "monoclose/ideal.hpp"
#include "monoclose/properties.hpp"
#include "test_support.hpp"

namespace monoclose {
namespace {

using testing::Point;

MonomialIdeal i32() { return MonomialIdeal(3, {{2, 2, 0}, {2, 0, 2}, {0, 2, 2}}); }

TEST(ExponentVector, RejectsNegativeCoordinates) {
  EXPECT_THROW(ExponentVector({1, -1}), DomainError);
  ExponentVector v(2);
  EXPECT_THROW(v.set(0, -3), DomainError);
}

TEST(Divides, Examples) {
  EXPECT_TRUE(divides({0, 2, 2}, {1, 3, 5}));
  EXPECT_TRUE(divides({1, 1, 2}, {1, 1, 2}));
  EXPECT_FALSE(divides({2, 2, 0}, {1, 3, 5}));
  EXPECT_THROW(divides({1, 2}, {1, 2, 3}), DimensionError);
}

TEST(LcmGcd, Examples) {
  EXPECT_EQ(lcm({2, 0, 2}, {0, 2, 2}), ExponentVector({2, 2, 2}));
  EXPECT_EQ(gcd({3, 1, 1, 0}, {1, 1, 0, 2}), ExponentVector({1, 1, 0, 0}));
  EXPECT_EQ(lcm({4, 0, 7}, {0, 0, 0}), ExponentVector({4, 0, 7}));
  EXPECT_THROW(gcd({1}, {1, 2}), DimensionError);
}

TEST(Exponent, ArbitraryPrecision) {
  const Exponent big = Exponent(1) << 100;
  ExponentVector a(std::vector<Exponent>{big, 1});
  ExponentVector b(std::vector<Exponent>{big + 1, 1});
  EXPECT_TRUE(divides(a, b));
  EXPECT_FALSE(divides(b, a));
  EXPECT_EQ(lcm(a, b)[0], big + 1);
}

TEST(Minimalize, DivisibilityChain) {
  auto out = minimalize({{2, 2, 0}, {1, 2, 2}, {2, 2, 1}});
  // x1x2^2x3^2 is not divisible by x1^2x2^2, so two survive
  EXPECT_EQ(out, (std::vector<ExponentVector>{{1, 2, 2}, {2, 2, 0}}));
  auto chain = minimalize({{2, 2, 0}, {2, 2, 2}, {2, 2, 1}});
  EXPECT_EQ(chain, (std::vector<ExponentVector>{{2, 2, 0}}));
}

TEST(Minimalize, DeltaSetIsAntichain) {
  std::vector<ExponentVector> delta{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {0, 2, 2}, {2, 0, 2}, {2, 2, 0}};
  auto out = minimalize(delta);
  EXPECT_EQ(out.size(), 6u);
  EXPECT_TRUE(std::is_sorted(out.begin(), out.end()));
}

TEST(Minimalize, Empty) { EXPECT_TRUE(minimalize({}).empty()); }

TEST(MonomialIdeal, ZeroAndUnit) {
  auto zero = MonomialIdeal::zero(3);
  auto unit = MonomialIdeal::unit(3);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(unit.is_unit());
  EXPECT_FALSE(contains(zero, {0, 0, 0}));
  EXPECT_TRUE(contains(unit, {0, 0, 0}));
  // the unit generator absorbs everything else
  EXPECT_EQ(MonomialIdeal(3, {{0, 0, 0}, {1, 2, 3}}), unit);
}

TEST(MonomialIdeal, GeneratorLengthChecked) {
  EXPECT_THROW(MonomialIdeal(3, {{1, 2}}), DimensionError);
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(i32(), {1, 3, 5}));
  EXPECT_FALSE(contains(i32(), {1, 1, 2}));
  MonomialIdeal pair(3, {{2, 0, 0}, {0, 2, 0}});
  EXPECT_FALSE(contains(pair, {0, 0, 2}));
  EXPECT_THROW(contains(pair, {1, 1}), DimensionError);
}

TEST(SumIntersect, PairwiseIntersectionGivesFamily) {
  MonomialIdeal a(3, {{2, 0, 0}, {0, 2, 0}});
  MonomialIdeal b(3, {{2, 0, 0}, {0, 0, 2}});
  MonomialIdeal c(3, {{0, 2, 0}, {0, 0, 2}});
  EXPECT_EQ(intersect_all({a, b, c}), i32());
  EXPECT_EQ(sum(i32(), MonomialIdeal::zero(3)), i32());
  EXPECT_THROW(sum(i32(), MonomialIdeal::zero(2)), DimensionError);
}

TEST(SumIntersect, TwoPairsAgainstEnumeration) {
  MonomialIdeal a(3, {{2, 0, 0}, {0, 2, 0}});
  MonomialIdeal b(3, {{0, 2, 0}, {0, 0, 2}});
  // oracle: u is in the intersection iff raw membership holds in both
  std::vector<Point> both;
  testing::for_each_point(3, 4, [&](const Point& u) {
    if (testing::raw_member(testing::raw_gens(a), u) && testing::raw_member(testing::raw_gens(b), u))
      both.push_back(u);
  });
  const auto expected = testing::raw_minimal(both);
  EXPECT_EQ(expected, (std::vector<Point>{{0, 2, 0}, {2, 0, 2}}));
  EXPECT_EQ(testing::raw_gens(intersect(a, b)), expected);
}

TEST(Colon, ByMember) { EXPECT_TRUE(colon_mon(i32(), {2, 2, 0}).is_unit()); }

TEST(Colon, ByIdealAgainstEnumeration) {
  MonomialIdeal x1(3, {{1, 0, 0}});
  // oracle: u ∈ (I : x1) iff u + e1 ∈ I
  std::vector<Point> members;
  testing::for_each_point(3, 4, [&](const Point& u) {
    Point v = u;
    v[0] += 1;
    if (testing::raw_member(testing::raw_gens(i32()), v))
      members.push_back(u);
  });
  const auto expected = testing::raw_minimal(members);
  EXPECT_EQ(expected, (std::vector<Point>{{0, 2, 2}, {1, 0, 2}, {1, 2, 0}}));
  EXPECT_EQ(testing::raw_gens(colon_ideal(i32(), x1)), expected);
}

TEST(Colon, IdentitiesAndErrors) {
  EXPECT_TRUE(colon_ideal(i32(), i32()).is_unit());
  EXPECT_EQ(colon_ideal(i32(), MonomialIdeal::unit(3)), i32());
  EXPECT_THROW(colon_ideal(i32(), MonomialIdeal::zero(3)), DomainError);
  EXPECT_THROW(colon_mon(i32(), {1, 1}), DimensionError);
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(i32()), MonomialIdeal(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(radical(MonomialIdeal(2, {{2, 0}, {0, 3}})), MonomialIdeal(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(radical(radical(i32())), radical(i32()));
}

TEST(IdealEquals, IgnoresVariableNames) {
  MonomialIdeal a(std::vector<std::string>{"x", "y"}, {{1, 0}});
  MonomialIdeal b(std::vector<std::string>{"u", "v"}, {{1, 0}});
  EXPECT_TRUE(ideal_equals(a, b));
}

// Randomized laws over small ideals (n <= 4, exponents <= 4, <= 5 generators).
class IdealLaws : public ::testing::Test {
protected:
  std::mt19937_64 rng{0xC0FFEE};

  std::pair<MonomialIdeal, MonomialIdeal> pair_in_same_ring() {
    for (;;) {
      auto a = properties::random_ideal(rng, 4, 4, 5);
      auto b = properties::random_ideal(rng, 4, 4, 5);
      if (a.nvars() == b.nvars())
        return {a, b};
    }
  }
};

TEST_F(IdealLaws, CanonicalFormGeneratesSameIdeal) {
  std::uniform_int_distribution<int> e(0, 4);
  for (int c = 0; c < 300; ++c) {
    std::vector<ExponentVector> raw;
    std::vector<Point> pts;
    for (int k = 0; k < 5; ++k) {
      Point p{e(rng), e(rng), e(rng)};
      pts.push_back(p);
      raw.push_back(testing::to_vector(p));
    }
    MonomialIdeal ideal(3, raw);
    const auto& gens = ideal.gens();
    ASSERT_TRUE(std::is_sorted(gens.begin(), gens.end()));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (i != j) {
          ASSERT_FALSE(divides(gens[i], gens[j]));
        }
    for (const auto& g : raw)
      ASSERT_TRUE(contains(ideal, g));
    testing::for_each_point(3, 4, [&](const Point& u) {
      ASSERT_EQ(contains(ideal, testing::to_vector(u)), testing::raw_member(pts, u));
    });
  }
}

TEST_F(IdealLaws, SumAndIntersectionAreLattices) {
  for (int c = 0; c < 300; ++c) {
    auto [a, b] = pair_in_same_ring();
    auto cc = properties::random_ideal(rng, a.nvars(), 4, 5);
    if (cc.nvars() != a.nvars())
      continue;
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(sum(a, b), sum(b, a));
    EXPECT_EQ(intersect(intersect(a, b), cc), intersect(a, intersect(b, cc)));
    EXPECT_EQ(sum(sum(a, b), cc), sum(a, sum(b, cc)));
    EXPECT_EQ(intersect(a, a), a);
    EXPECT_EQ(sum(a, a), a);
  }
}

TEST_F(IdealLaws, ColonAdjunction) {
  std::uniform_int_distribution<int> e(0, 3);
  for (int c = 0; c < 200; ++c) {
    auto ideal = properties::random_ideal(rng, 3, 4, 5);
    const std::size_t n = ideal.nvars();
    Point m(n);
    for (auto& x : m)
      x = e(rng);
    const auto q = colon_mon(ideal, testing::to_vector(m));
    testing::for_each_point(n, 4, [&](const Point& u) {
      Point um = u;
      for (std::size_t i = 0; i < n; ++i)
        um[i] += m[i];
      ASSERT_EQ(contains(q, testing::to_vector(u)), contains(ideal, testing::to_vector(um)));
    });
  }
}

TEST_F(IdealLaws, RadicalOfIntersection) {
  for (int c = 0; c < 300; ++c) {
    auto [a, b] = pair_in_same_ring();
    EXPECT_EQ(radical(intersect(a, b)), intersect(radical(a), radical(b)));
  }
}

}  // namespace
}  // namespace monoclose
