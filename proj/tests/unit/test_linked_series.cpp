#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lls/error.hpp"
#include "lls/generator.hpp"
#include "lls/linked_series.hpp"

using namespace lls;
using lls::test::exact_line;
using lls::test::gapped_line;
using lls::test::span;

TEST(Shape, Rejected) {
  LimitLinearSeries g = exact_line();
  g.spaces.pop_back();
  EXPECT_THROW(g.validate_shape(), InvalidInput);
  g = exact_line();
  g.spaces[1] = span(4, {{0, 0, 0, 1}, {0, 1, 0, 0}});
  EXPECT_THROW(check_compatible(g), DimensionMismatch);
  g = exact_line();
  g.spaces[0] = span(3, {{1, 0, 0}});
  EXPECT_THROW(g.validate_shape(), DimensionMismatch);
}

TEST(Compatible, Examples) {
  EXPECT_TRUE(check_compatible(exact_line()).holds);
  EXPECT_TRUE(check_compatible(gapped_line()).holds);
  LimitLinearSeries g = exact_line();
  g.spaces[1] = span(4, {{0, 1, 1, 0}});  // ρ1 = <t> ⊄ ι1⁻¹(V⁽⁰⁾) = 0
  auto report = check_compatible(g);
  EXPECT_FALSE(report.holds);
  ASSERT_TRUE(report.first_failure());
  EXPECT_FALSE(report.first_failure()->y_side_holds);
}

TEST(Exact, Examples) {
  EXPECT_TRUE(check_exact(exact_line()).holds);
  auto report = check_exact(gapped_line());
  EXPECT_FALSE(report.holds);
  ASSERT_EQ(report.failures.size(), 1u);
  EXPECT_EQ(report.failures[0].left, 0u);
  EXPECT_EQ(report.failures[0].rho2_left_dim, 0u);
  EXPECT_EQ(report.failures[0].iota2_right_dim, 1u);
  EXPECT_EQ(pair_label(gapped_line().delta, 0), "(0,1)");
  LimitLinearSeries single{CurveModel(0), 0, DeltaSet(0, {}), {span(2, {{1, 1}})}};
  EXPECT_TRUE(check_exact(single).holds);
}

TEST(NumericalData, Examples) {
  EXPECT_EQ(numerical_data(exact_line()), (NumericalData{{0, 0, 1}, {1, 0, 0}}));
  EXPECT_EQ(numerical_data(gapped_line()), (NumericalData{{0, 1, 0}, {1, 0, 0}}));
  EXPECT_TRUE(is_exact_via_sum(numerical_data(exact_line()), 0));
  EXPECT_FALSE(is_exact_via_sum(numerical_data(gapped_line()), 0));
}

TEST(NumericalData, SplitInstanceHasNoDefect) {
  LimitLinearSeries g{CurveModel(1), 1, DeltaSet(1, {1}),
                      {span(4, {{0, 1, 0, 0}, {0, 0, 0, 1}}), span(4, {{0, 1, 0, 0}, {0, 0, 0, 1}})}};
  for (const auto& e : numerical_data(g)) EXPECT_EQ(e.m, 0);
}

TEST(Minimal, Examples) {
  EXPECT_TRUE(is_minimal(numerical_data(exact_line()), exact_line().delta));
  DeltaSet half(1, {2});
  EXPECT_FALSE(is_minimal({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}, half));
  EXPECT_TRUE(is_minimal({{0, 0, 0}, {0, 0, 1}, {1, 0, 0}}, half));
}

TEST(Membership, FlagsWrongSlot) {
  LimitLinearSeries g = exact_line();
  g.spaces[0] = span(4, {{1, 0, 0, 0}});
  EXPECT_EQ(membership_failures(g), (std::vector<std::size_t>{0}));
  EXPECT_TRUE(membership_failures(exact_line()).empty());
}

TEST(ReduceMinimal, Examples) {
  EXPECT_EQ(reduce_minimal(exact_line()), exact_line());
  LimitLinearSeries padded = gen::pad_with_node(exact_line(), 0);
  EXPECT_EQ(padded.delta.delta(), (std::vector<int>{2}));
  EXPECT_TRUE(check_exact(padded).holds);
  EXPECT_FALSE(is_minimal(numerical_data(padded), padded.delta));
  EXPECT_EQ(reduce_minimal(padded), exact_line());
  LimitLinearSeries twice = gen::pad_with_node(padded, 1);
  EXPECT_EQ(twice.delta.delta(), (std::vector<int>{3}));
  EXPECT_EQ(reduce_minimal(twice), exact_line());
  EXPECT_THROW(reduce_minimal(gapped_line()), ValidationFailure);
}

TEST(TorusEquivalence, Examples) {
  EXPECT_TRUE(torus_equivalent(exact_line(), exact_line()));
  auto rng = gen::make_rng(5);
  LimitLinearSeries g = gen::random_exact_lls(2, 1, {2, 1}, 11);
  LimitLinearSeries scaled = act_on_series(g, {1, 3, 1, 1});
  auto witness = torus_equivalence_witness(g, scaled);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ((*witness)[1], 3);
  EXPECT_EQ((*witness)[0], 1);

  // integer slot moved by hand: not an admissible change
  LimitLinearSeries moved = exact_line();
  moved.spaces[0] = act(moved.model.split(), 2, moved.spaces[0]);
  EXPECT_FALSE(torus_equivalent(exact_line(), moved));
  EXPECT_FALSE(torus_equivalent(exact_line(), gapped_line()));
  EXPECT_THROW(act_on_series(exact_line(), {1}), DimensionMismatch);
}

TEST(ProjectLevelOne, Examples) {
  EXPECT_EQ(project_level_one(exact_line()), exact_line());
  LimitLinearSeries g = gen::random_exact_lls(1, 0, {2}, 3);
  LimitLinearSeries p = project_level_one(g);
  EXPECT_EQ(p.delta.delta(), (std::vector<int>{1}));
  EXPECT_EQ(p.spaces.front(), g.spaces.front());
  EXPECT_EQ(p.spaces.back(), g.spaces.back());
  EXPECT_TRUE(check_compatible(p).holds);
  EXPECT_THROW(project_level_one(gapped_line()), ValidationFailure);
}

class SeriesProperty : public ::testing::TestWithParam<int> {};

TEST_P(SeriesProperty, GeneratedInvariants) {
  const int seed = GetParam();
  auto rng = gen::make_rng(77, static_cast<std::uint64_t>(seed));
  const int d = 1 + seed % 4;
  const int r = seed % (d + 1);
  auto delta = gen::random_feasible_delta(d, r, 3, rng);
  LimitLinearSeries g = gen::random_exact_lls(d, r, delta, static_cast<std::uint64_t>(seed));

  auto data = numerical_data(g);
  EXPECT_EQ(check_exact(g).holds, is_exact_via_sum(data, r));
  EXPECT_EQ(data.front().p, 0);
  EXPECT_EQ(data.back().q, 0);

  // dim ρ1 decreases weakly from r + 1 to 0
  const TorusSplit split = g.model.split();
  std::size_t previous = static_cast<std::size_t>(r) + 1;
  EXPECT_EQ(block_profile(split, g.spaces.front()).rho1.dim(), previous);
  for (const auto& v : g.spaces) {
    std::size_t a = block_profile(split, v).rho1.dim();
    EXPECT_LE(a, previous);
    previous = a;
  }
  EXPECT_EQ(block_profile(split, g.spaces.back()).iota1_inv.dim(), 0u);

  std::vector<Rational> scalars;
  for (std::size_t k = 0; k < g.spaces.size(); ++k)
    scalars.push_back(g.delta.is_integer_position(k) ? Rational(1) : gen::random_nonzero_rational(rng));
  LimitLinearSeries h = act_on_series(g, scalars);
  EXPECT_TRUE(torus_equivalent(g, h));
  EXPECT_EQ(numerical_data(h), data);

  LimitLinearSeries padded = gen::pad_with_node(g, static_cast<std::size_t>(seed) % (g.spaces.size() - 1));
  LimitLinearSeries once = reduce_minimal(padded);
  EXPECT_EQ(reduce_minimal(once), once);
  EXPECT_EQ(once, g);
  EXPECT_TRUE(check_exact(once).holds);
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeriesProperty, ::testing::Range(0, 30));
