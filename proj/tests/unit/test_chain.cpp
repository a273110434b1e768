#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lls/chain.hpp"
#include "lls/error.hpp"
#include "lls/generator.hpp"

using namespace lls;
using lls::test::exact_line;
using lls::test::gapped_line;
using lls::test::span;

TEST(BuildChain, ExactLine) {
  ContinuousChain c = build_chain(exact_line());
  ASSERT_EQ(c.components.size(), 2u);
  EXPECT_EQ(c.components[0].kind, ComponentKind::Orbit);
  EXPECT_EQ(c.components[0].degree_in_g, 1u);
  EXPECT_EQ(c.components[1].kind, ComponentKind::Fixed);
  EXPECT_EQ(c.components[1].degree_in_g, 0u);
  EXPECT_EQ(c.components[0].target, (ChainTarget{ChainTarget::Kind::Component, 0}));
  ASSERT_EQ(c.nodes.size(), 1u);
  EXPECT_EQ(c.nodes[0].space, span(4, {{0, 0, 0, 1}}));
  EXPECT_TRUE(validate_chain(c).passed());
}

TEST(BuildChain, GappedLineFailsAtFirstPair) {
  try {
    build_chain(gapped_line());
    FAIL() << "expected a gluing failure";
  } catch (const GluingFailure& e) {
    EXPECT_EQ(e.left(), 0u);
    EXPECT_EQ(e.right(), 1u);
    EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos);
  }
}

TEST(BuildChain, SingleIndex) {
  LimitLinearSeries g = gen::random_exact_lls(0, 0, {}, 1);
  ContinuousChain c = build_chain(g);
  ASSERT_EQ(c.components.size(), 1u);
  EXPECT_TRUE(c.nodes.empty());
  EXPECT_EQ(c.components[0].degree_in_g, orbit_degree(g.model.split(), g.spaces[0]));
  EXPECT_EQ(c.components[0].degree_in_g, 1u);
  EXPECT_TRUE(validate_chain(c).passed());
  EXPECT_EQ(emit_dot(c).find("->"), std::string::npos);
}

TEST(BuildChain, RejectsNonMinimalAndNonMembers) {
  EXPECT_THROW(build_chain(gen::pad_with_node(exact_line(), 0)), ValidationFailure);
  LimitLinearSeries g = exact_line();
  g.spaces[0] = span(4, {{1, 0, 1, 0}});
  EXPECT_THROW(build_chain(g), ValidationFailure);
}

TEST(ValidateChain, WrongNodeBreaksGluing) {
  ContinuousChain c = build_chain(exact_line());
  c.nodes[0].space = span(4, {{0, 1, 0, 0}});
  ChainReport report = validate_chain(c);
  EXPECT_FALSE(report.passed());
  ASSERT_NE(report.find("gluing"), nullptr);
  EXPECT_FALSE(report.find("gluing")->passed);
}

TEST(ValidateChain, ScaledIntegerSlotLeavesSectionSpace) {
  ContinuousChain c = build_chain(exact_line());
  c.components[0].base_space = act(c.model.split(), 3, c.components[0].base_space);
  ChainReport report = validate_chain(c);
  EXPECT_FALSE(report.find("membership")->passed);
}

TEST(ValidateChain, DegreeMismatchReported) {
  ContinuousChain c = build_chain(exact_line());
  c.components[0].degree_in_g = 2;
  EXPECT_FALSE(validate_chain(c).find("degree")->passed);
}

TEST(Hilbert, ExactLineAndDuplicates) {
  ContinuousChain c = build_chain(exact_line());
  HilbertData h = hilbert_coefficients(c);
  EXPECT_EQ(h, (HilbertData{1, 0, {1, 1}, 1}));
  EXPECT_EQ(c.hilbert, h);
  c.components[1].target = c.components[0].target;
  EXPECT_THROW(hilbert_coefficients(c), ValidationFailure);
}

TEST(Evaluate, ExactLineRoundTrip) {
  EXPECT_EQ(evaluate_at_base_points(build_chain(exact_line())), exact_line());
}

TEST(Dot, ExactLineShape) {
  std::string dot = emit_dot(build_chain(exact_line()));
  EXPECT_EQ(dot, emit_dot(build_chain(exact_line())));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++edges;
  EXPECT_EQ(edges, 1u);
  EXPECT_NE(dot.find("c0 ["), std::string::npos);
  EXPECT_NE(dot.find("c1 ["), std::string::npos);
}

TEST(Target, IntegerAndNode) {
  EXPECT_EQ(target_for(2), (ChainTarget{ChainTarget::Kind::Component, 2}));
  EXPECT_EQ(target_for(Rational(3, 2)), (ChainTarget{ChainTarget::Kind::Node, 2}));
}

class ChainProperty : public ::testing::TestWithParam<int> {};

TEST_P(ChainProperty, GeneratedChainsValidate) {
  const int seed = GetParam();
  auto rng = gen::make_rng(99, static_cast<std::uint64_t>(seed));
  const int d = seed % 4;
  const int r = seed % (d + 1);
  auto delta = gen::random_feasible_delta(d, r, 2, rng);
  LimitLinearSeries g = gen::random_exact_lls(d, r, delta, static_cast<std::uint64_t>(seed));
  ContinuousChain c = build_chain(g);
  ChainReport report = validate_chain(c);
  for (const auto& check : report.checks) EXPECT_TRUE(check.passed) << check.name << ": " << check.detail;
  std::size_t total = 0;
  for (const auto& comp : c.components) {
    total += comp.degree_in_g;
    if (!is_integer(comp.index)) EXPECT_EQ(comp.kind, ComponentKind::Orbit);
  }
  EXPECT_EQ(total, static_cast<std::size_t>(r) + 1);
  EXPECT_EQ(hilbert_coefficients(c),
            (HilbertData{static_cast<std::size_t>(r) + 1, 0, std::vector<std::size_t>(d + 1, 1), 1}));
  EXPECT_TRUE(torus_equivalent(evaluate_at_base_points(c), g));
  ContinuousChain again = build_chain(evaluate_at_base_points(c));
  EXPECT_EQ(again.nodes, c.nodes);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ChainProperty, ::testing::Range(0, 24));
