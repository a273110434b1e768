#include <gtest/gtest.h>

#include "lls/chain.hpp"
#include "lls/error.hpp"
#include "lls/generator.hpp"

using namespace lls;

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  auto a = gen::make_rng(1, 0);
  auto b = gen::make_rng(1, 0);
  auto c = gen::make_rng(1, 1);
  auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
}

TEST(RandomExactLls, SameSeedSameInstance) {
  EXPECT_EQ(gen::random_exact_lls(3, 1, {2, 1, 1}, 17), gen::random_exact_lls(3, 1, {2, 1, 1}, 17));
}

TEST(RandomExactLls, DegreeOneRankZero) {
  LimitLinearSeries g = gen::random_exact_lls(1, 0, {1}, 9);
  EXPECT_TRUE(check_exact(g).holds);
  auto n = numerical_data(g);
  EXPECT_EQ(n[0].m + n[1].m, 1);
  EXPECT_EQ(n[0].p, 0);
  EXPECT_EQ(n[1].q, 0);
}

TEST(RandomExactLls, DegreeZero) {
  LimitLinearSeries g = gen::random_exact_lls(0, 0, {}, 3);
  ASSERT_EQ(g.spaces.size(), 1u);
  EXPECT_EQ(g.spaces[0].dim(), 1u);
  EXPECT_TRUE(check_exact(g).holds);
}

TEST(RandomExactLls, Preconditions) {
  EXPECT_THROW(gen::random_exact_lls(2, 3, {1, 1}, 0), InvalidInput);
  EXPECT_THROW(gen::random_exact_lls(9, 0, std::vector<int>(9, 1), 0), InvalidInput);
  EXPECT_THROW(gen::random_exact_lls(2, 0, {2, 2}, 0), ValidationFailure);
  EXPECT_FALSE(gen::exact_minimal_profile_exists(2, 0, {2, 2}));
  EXPECT_TRUE(gen::exact_minimal_profile_exists(2, 1, {2, 2}));
}

TEST(RandomExactLls, ValidatesAcrossParameters) {
  int built = 0;
  for (int d = 0; d <= 4; ++d)
    for (int r = 0; r <= std::min(d, 2); ++r)
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        auto rng = gen::make_rng(seed, 1000);
        auto delta = gen::random_feasible_delta(d, r, 3, rng);
        LimitLinearSeries g = gen::random_exact_lls(d, r, delta, seed);
        EXPECT_TRUE(membership_failures(g).empty());
        EXPECT_TRUE(check_compatible(g).holds);
        EXPECT_TRUE(check_exact(g).holds);
        EXPECT_TRUE(is_minimal(numerical_data(g), g.delta));
        EXPECT_TRUE(validate_chain(build_chain(g)).passed());
        ++built;
      }
  EXPECT_EQ(built, 4 * (1 + 2 + 3 + 3 + 3));
}

TEST(SubspaceWithProfile, RealizesProfile) {
  auto rng = gen::make_rng(4);
  TorusSplit split(3, 3);
  Subspace iota1 = gen::random_between(Subspace::zero(3), Subspace::full(3), 1, rng);
  Subspace rho1 = gen::random_between(iota1, Subspace::full(3), 3, rng);
  Subspace iota2 = Subspace::zero(3);
  Subspace rho2 = gen::random_between(iota2, Subspace::full(3), 2, rng);
  Subspace v = gen::subspace_with_profile(split, rho1, iota1, rho2, iota2, rng);
  BlockProfile p = block_profile(split, v);
  EXPECT_EQ(p.rho1, rho1);
  EXPECT_EQ(p.iota1_inv, iota1);
  EXPECT_EQ(p.rho2, rho2);
  EXPECT_EQ(p.iota2_inv, iota2);
  EXPECT_THROW(gen::subspace_with_profile(split, rho1, iota1, rho2, rho2, rng), InvalidInput);
}

TEST(PadWithNode, ExactButNotMinimal) {
  LimitLinearSeries g = gen::random_exact_lls(2, 1, {1, 2}, 5);
  for (std::size_t k = 0; k + 1 < g.spaces.size(); ++k) {
    LimitLinearSeries p = gen::pad_with_node(g, k);
    EXPECT_EQ(p.spaces.size(), g.spaces.size() + 1);
    EXPECT_TRUE(membership_failures(p).empty());
    EXPECT_TRUE(check_exact(p).holds);
    EXPECT_FALSE(is_minimal(numerical_data(p), p.delta));
  }
}

TEST(CollapseSlot, CompatibleButNotExact) {
  int collapsed = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    LimitLinearSeries g = gen::random_exact_lls(3, 1, {2, 1, 2}, seed);
    auto rng = gen::make_rng(seed, 7);
    for (std::size_t k = 0; k < g.spaces.size(); ++k) {
      auto bad = gen::collapse_slot(g, k, rng);
      if (!bad) continue;
      ++collapsed;
      EXPECT_TRUE(membership_failures(*bad).empty());
      EXPECT_TRUE(check_compatible(*bad).holds);
      auto exact = check_exact(*bad);
      ASSERT_FALSE(exact.holds);
      std::size_t first = exact.failures.front().left;
      EXPECT_TRUE(first == k || first + 1 == k);
    }
  }
  EXPECT_GT(collapsed, 20);
}

TEST(OrbitPair, SatisfiesHypothesis) {
  auto rng = gen::make_rng(12);
  TorusSplit split(3, 3);
  int made = 0;
  for (int k = 0; k < 80; ++k) {
    const bool want_point = k % 2 == 0;
    const bool mirrored = (k / 2) % 2 == 1;
    auto pair = gen::random_orbit_pair(split, 1 + k % 4, want_point, mirrored, rng);
    if (!pair) continue;
    ++made;
    BlockProfile pv = block_profile(split, pair->v);
    BlockProfile pw = block_profile(split, pair->w);
    EXPECT_FALSE(is_fixed(split, pair->v));
    EXPECT_FALSE(is_fixed(split, pair->w));
    EXPECT_EQ(pair->v.dim(), pair->w.dim());
    if (mirrored) {
      EXPECT_EQ(pw.rho2, pv.iota2_inv);
      EXPECT_EQ(pw.iota1_inv == pv.rho1, want_point);
    } else {
      EXPECT_EQ(pw.rho1, pv.iota1_inv);
      EXPECT_EQ(pw.iota2_inv == pv.rho2, want_point);
    }
  }
  EXPECT_GT(made, 15);
}
