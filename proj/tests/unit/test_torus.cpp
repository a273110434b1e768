#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lls/error.hpp"
#include "lls/generator.hpp"
#include "lls/torus.hpp"

using namespace lls;
using lls::test::span;

namespace {

// W1 = <e1, e2>, W2 = <f1, f2>; coordinates e1, e2, f1, f2.
const TorusSplit kSplit(2, 2);

Subspace w1(std::initializer_list<std::initializer_list<Rational>> rows) { return span(2, rows); }

}  // namespace

TEST(TorusSplit, RejectsEmptyAmbient) {
  EXPECT_THROW(TorusSplit(0, 0), InvalidInput);
  EXPECT_NO_THROW(TorusSplit(0, 1));
}

TEST(Act, FixesBlockSplitSpaces) {
  Subspace v = span(4, {{1, 1, 0, 0}, {0, 0, 0, 1}});
  EXPECT_EQ(act(kSplit, 5, v), v);
}

TEST(Act, ScalesFirstBlockByInverse) {
  EXPECT_EQ(act(kSplit, 2, span(4, {{1, 0, 1, 0}})), span(4, {{1, 0, 2, 0}}));
}

TEST(Act, GroupLawAndIdentity) {
  auto rng = gen::make_rng(7);
  for (int k = 0; k < 10; ++k) {
    Subspace v = gen::random_subspace(kSplit, 2, rng);
    EXPECT_EQ(act(kSplit, 3, act(kSplit, 2, v)), act(kSplit, 6, v));
    EXPECT_EQ(act(kSplit, 1, v), v);
  }
}

TEST(Act, RejectsZeroAndMismatch) {
  EXPECT_THROW(act(kSplit, 0, span(4, {{1, 0, 1, 0}})), InvalidInput);
  EXPECT_THROW(act(kSplit, 2, span(3, {{1, 0, 1}})), DimensionMismatch);
}

TEST(BlockProfile, GraphLine) {
  BlockProfile p = block_profile(kSplit, span(4, {{1, 0, 1, 0}}));
  EXPECT_EQ(p.iota1_inv, Subspace::zero(2));
  EXPECT_EQ(p.iota2_inv, Subspace::zero(2));
  EXPECT_EQ(p.rho1, w1({{1, 0}}));
  EXPECT_EQ(p.rho2, w1({{1, 0}}));
}

TEST(BlockProfile, SplitSpace) {
  BlockProfile p = block_profile(kSplit, span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(p.iota1_inv, w1({{1, 0}}));
  EXPECT_EQ(p.iota2_inv, w1({{1, 0}}));
  EXPECT_EQ(p.rho1, w1({{1, 0}}));
  EXPECT_EQ(p.rho2, w1({{1, 0}}));
}

TEST(BlockProfile, MixedSpace) {
  BlockProfile p = block_profile(kSplit, span(4, {{1, 0, 1, 0}, {0, 1, 0, 0}}));
  EXPECT_EQ(p.iota1_inv, w1({{0, 1}}));
  EXPECT_EQ(p.iota2_inv, Subspace::zero(2));
  EXPECT_EQ(p.rho1, Subspace::full(2));
  EXPECT_EQ(p.rho2, w1({{1, 0}}));
}

TEST(IsFixed, Examples) {
  EXPECT_TRUE(is_fixed(kSplit, span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}})));
  EXPECT_FALSE(is_fixed(kSplit, span(4, {{1, 0, 1, 0}})));
  EXPECT_TRUE(is_fixed(kSplit, Subspace::zero(4)));
  EXPECT_TRUE(is_fixed(kSplit, Subspace::full(4)));
}

TEST(Limit, GraphLine) {
  Subspace v = span(4, {{1, 0, 1, 0}});
  EXPECT_EQ(limit(kSplit, v, LimitDirection::Zero), span(4, {{1, 0, 0, 0}}));
  EXPECT_EQ(limit(kSplit, v, LimitDirection::Infinity), span(4, {{0, 0, 1, 0}}));
}

TEST(Limit, GraphPlane) {
  Subspace v = span(4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
  EXPECT_EQ(limit(kSplit, v, LimitDirection::Zero), span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  EXPECT_EQ(limit(kSplit, v, LimitDirection::Infinity), span(4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST(Limit, FixedPointIsItsOwnLimit) {
  Subspace v = span(4, {{0, 1, 0, 0}, {0, 0, 1, 1}});
  EXPECT_EQ(limit(kSplit, v, LimitDirection::Zero), v);
  EXPECT_EQ(limit(kSplit, v, LimitDirection::Infinity), v);
}

TEST(OrbitDegree, Examples) {
  EXPECT_EQ(orbit_degree(kSplit, span(4, {{0, 1, 0, 0}})), 0u);
  EXPECT_EQ(orbit_degree(kSplit, span(4, {{1, 0, 1, 0}})), 1u);
  EXPECT_EQ(orbit_degree(kSplit, span(4, {{1, 0, 1, 0}, {0, 1, 0, 1}})), 2u);
}

TEST(WeightProfile, Examples) {
  using P = std::set<std::pair<std::size_t, std::size_t>>;
  EXPECT_EQ(orbit_weight_profile(kSplit, span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}})), (P{{1, 1}}));
  EXPECT_EQ(orbit_weight_profile(kSplit, span(4, {{1, 0, 1, 0}})), (P{{1, 0}, {0, 1}}));
  EXPECT_EQ(orbit_weight_profile(kSplit, span(4, {{1, 0, 1, 0}, {0, 1, 0, 0}})), (P{{2, 0}, {1, 1}}));
}

TEST(OrbitIntersection, PointCase) {
  Subspace v = span(4, {{1, 0, 1, 0}, {0, 1, 0, 0}});  // ι1⁻¹ = <e2>, ρ2 = <f1>
  Subspace w = span(4, {{0, 1, 0, 1}, {0, 0, 1, 0}});  // ρ1 = <e2>, ι2⁻¹ = <f1>
  auto point = orbit_intersection(kSplit, v, w);
  ASSERT_TRUE(point.has_value());
  EXPECT_EQ(*point, span(4, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(*point, limit(kSplit, v, LimitDirection::Infinity));
  EXPECT_EQ(*point, limit(kSplit, w, LimitDirection::Zero));
  EXPECT_TRUE(tangent_certificate(kSplit, v, w).ok());
}

TEST(OrbitIntersection, EmptyCase) {
  Subspace v = span(4, {{1, 0, 1, 0}, {0, 1, 0, 0}});
  Subspace w = span(4, {{0, 1, 1, 0}, {0, 0, 0, 1}});  // ρ1 = <e2>, ι2⁻¹ = <f2> ≠ <f1>
  EXPECT_FALSE(orbit_intersection(kSplit, v, w).has_value());
}

TEST(OrbitIntersection, MirroredPointCase) {
  Subspace a = span(4, {{1, 0, 1, 0}, {0, 1, 0, 0}});
  Subspace b = span(4, {{0, 1, 0, 1}, {0, 0, 1, 0}});
  // Swapping the roles: ρ2(a) = <f1> = ι2⁻¹(b), and ι1⁻¹(b) = 0 ≠ ρ1(a), so
  // only the mirrored hypothesis applies with b first.
  auto point = orbit_intersection(kSplit, b, a);
  ASSERT_TRUE(point.has_value());
  EXPECT_EQ(*point, limit(kSplit, b, LimitDirection::Zero));
  EXPECT_EQ(*point, limit(kSplit, a, LimitDirection::Infinity));
}

TEST(OrbitIntersection, MisuseIsReported) {
  Subspace v = span(4, {{1, 0, 1, 0}, {0, 1, 0, 0}});
  Subspace bad = span(4, {{1, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_THROW(orbit_intersection(kSplit, v, bad), HypothesisViolation);
  EXPECT_THROW(orbit_intersection(kSplit, v, span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}})), InvalidInput);
  EXPECT_THROW(orbit_intersection(kSplit, v, span(4, {{1, 0, 1, 0}})), InvalidInput);
}

TEST(FirstOrderTerm, ZeroForFixedPoints) {
  Subspace v = span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  for (const auto& [cols, value] : first_order_term(kSplit, v, LimitDirection::Zero))
    EXPECT_EQ(value, 0);
}

TEST(EndPointTerm, ProportionalToLimit) {
  Subspace v = span(4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
  for (auto dir : {LimitDirection::Zero, LimitDirection::Infinity})
    EXPECT_TRUE(proportional(end_point_term(kSplit, v, dir), pluecker(limit(kSplit, v, dir))));
}

class TorusProperty : public ::testing::TestWithParam<int> {};

TEST_P(TorusProperty, RandomInvariants) {
  auto rng = gen::make_rng(42, static_cast<std::uint64_t>(GetParam()));
  const TorusSplit split(1 + GetParam() % 3, 1 + (GetParam() / 3) % 3);
  const std::size_t n = static_cast<std::size_t>(GetParam()) % (split.ambient() + 1);
  Subspace v = gen::random_subspace(split, n, rng);
  BlockProfile p = block_profile(split, v);
  EXPECT_EQ(p.iota1_inv.dim() + p.rho2.dim(), n);
  EXPECT_EQ(p.rho1.dim() + p.iota2_inv.dim(), n);
  EXPECT_TRUE(p.rho1.contains(p.iota1_inv));
  EXPECT_TRUE(p.rho2.contains(p.iota2_inv));

  const std::size_t deg = orbit_degree(split, v);
  EXPECT_EQ(deg, p.rho2.dim() - p.iota2_inv.dim());
  EXPECT_EQ(deg == 0, is_fixed(split, v));

  // weights form the interval [dim ι1⁻¹, dim ρ1]
  auto weights = orbit_weight_profile(split, v);
  std::set<std::size_t> firsts;
  for (auto [a, b] : weights) {
    EXPECT_EQ(a + b, n);
    firsts.insert(a);
  }
  EXPECT_EQ(firsts.size(), deg + 1);
  EXPECT_EQ(*firsts.begin(), p.iota1_inv.dim());
  EXPECT_EQ(*firsts.rbegin(), p.rho1.dim());

  Rational x = gen::random_nonzero_rational(rng);
  for (auto dir : {LimitDirection::Zero, LimitDirection::Infinity}) {
    Subspace lim = limit(split, v, dir);
    EXPECT_TRUE(is_fixed(split, lim));
    EXPECT_EQ(limit(split, act(split, x, v), dir), lim);
  }
  if (deg > 0) {
    EXPECT_NE(p.iota1_inv, p.rho1);
    EXPECT_NE(p.iota2_inv, p.rho2);
    EXPECT_NE(act(split, 2, v), act(split, 3, v));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, TorusProperty, ::testing::Range(0, 40));
