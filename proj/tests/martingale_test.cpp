#include <gtest/gtest.h>

#include <cmath>

#include "cubelab/error.hpp"
#include "cubelab/martingale.hpp"
#include "cubelab/random.hpp"
#include "cubelab/walsh.hpp"
#include "oracles.hpp"

namespace cubelab {
namespace {

std::vector<double> to_vec(const CubeFunction& f) { return {f.values().begin(), f.values().end()}; }

void expect_values(const CubeFunction& f, const std::vector<double>& want, double tol = 1e-15) {
  ASSERT_EQ(f.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(f[i], want[i], tol) << "point " << i;
}

TEST(Martingale, ConditionalExpectationSmallExample) {
  const CubeFunction f(2, {2, 0, 0, -2});
  expect_values(conditional_expectation(f, 0), {0, 0, 0, 0});
  // E_1 f depends on x_1 only and equals r_1 here.
  expect_values(conditional_expectation(f, 1), {1, -1, 1, -1});
  EXPECT_EQ(conditional_expectation(f, 1), rademacher(2, 1));
  EXPECT_EQ(conditional_expectation(f, 2), f);
}

TEST(Martingale, ConditionalExpectationMatchesOracle) {
  for (int ell = 1; ell <= 7; ++ell) {
    Rng rng = make_rng(31, ell);
    const CubeFunction f = random_function(ell, Ensemble::kGaussian, rng);
    for (int k = 0; k <= ell; ++k) {
      expect_values(conditional_expectation(f, k), oracle::conditional_expectation(to_vec(f), ell, k),
                    1e-13);
    }
  }
  EXPECT_THROW(conditional_expectation(CubeFunction::zero(2), 3), InvalidArgument);
  EXPECT_THROW(conditional_expectation(CubeFunction::zero(2), -1), InvalidArgument);
}

TEST(Martingale, MaximalAndSuperlevelExample) {
  const CubeFunction f(2, {4, 0, 0, 0});
  expect_values(maximal_function(f), {4, 1, 2, 1});
  const LevelSet a = superlevel_set(f, 1.5);
  EXPECT_EQ(a.members, (std::vector<std::size_t>{0, 2}));
  EXPECT_DOUBLE_EQ(a.measure, 0.5);
  // strict inequality
  EXPECT_EQ(superlevel_set(f, 2.0).members, (std::vector<std::size_t>{0}));
}

TEST(Martingale, SquareFunctionExample) {
  const CubeFunction s = square_function(CubeFunction(2, {4, 0, 0, 0}));
  const double r6 = std::sqrt(6.0), r2 = std::sqrt(2.0);
  expect_values(s, {r6, r2, r6, r2}, 1e-15);
  EXPECT_NEAR(lp_norm(s, 2.0), 2.0, 1e-15);  // equals ||f||_2
}

TEST(Martingale, MaximalMatchesOracle) {
  for (int ell = 1; ell <= 6; ++ell) {
    Rng rng = make_rng(32, ell);
    const CubeFunction f = random_function(ell, Ensemble::kSparse, rng);
    std::vector<std::vector<double>> levels;
    for (int k = 0; k <= ell; ++k) levels.push_back(oracle::conditional_expectation(to_vec(f), ell, k));
    const CubeFunction m = maximal_function(f);
    const CubeFunction s = square_function(f);
    for (std::size_t p = 0; p < f.size(); ++p) {
      double mx = 0.0, sq = levels[0][p] * levels[0][p];
      for (int k = 0; k <= ell; ++k) mx = std::max(mx, std::abs(levels[k][p]));
      for (int k = 1; k <= ell; ++k) sq += std::pow(levels[k][p] - levels[k - 1][p], 2);
      EXPECT_NEAR(m[p], mx, 1e-13);
      EXPECT_NEAR(s[p], std::sqrt(sq), 1e-13);
    }
  }
}

TEST(Martingale, SquareOfRademacherSpanIsConstant) {
  const std::vector<double> a = {1.0, -2.0, 0.5, 3.0, 0.0};
  const CubeFunction s = square_function(rademacher_span(a));
  const double len = std::sqrt(1 + 4 + 0.25 + 9);
  for (double v : s.values()) EXPECT_NEAR(v, len, 1e-12);
}

TEST(Martingale, ExpectationPyramidAccess) {
  const CubeFunction f(2, {4, 0, 0, 0});
  const ExpectationPyramid p(f);
  EXPECT_EQ(p.packed().size(), 7u);
  EXPECT_DOUBLE_EQ(p.at(1, 2), 2.0);
  EXPECT_DOUBLE_EQ(p.at(1, 3), 0.0);
  EXPECT_EQ(p.expand(1), conditional_expectation(f, 1));
}

TEST(Martingale, DyadicBlocks) {
  const DyadicBlock whole{0, 0};
  const DyadicBlock a{1, 0}, b{1, 1}, c{2, 2};  // c: x_1 = +1, x_2 = -1
  EXPECT_EQ(relate(a, a), BlockRelation::kEqual);
  EXPECT_EQ(relate(c, a), BlockRelation::kInside);
  EXPECT_EQ(relate(a, c), BlockRelation::kContains);
  EXPECT_EQ(relate(a, b), BlockRelation::kDisjoint);
  EXPECT_EQ(relate(c, b), BlockRelation::kDisjoint);
  EXPECT_EQ(relate(whole, c), BlockRelation::kContains);
  EXPECT_TRUE(c.contains(2));
  EXPECT_TRUE(c.contains(6));
  EXPECT_FALSE(c.contains(0));
  EXPECT_EQ(c.point_count(4), 4u);
  EXPECT_DOUBLE_EQ(c.measure(), 0.25);
  EXPECT_EQ(DyadicBlock::of(0b1110, 2), c);
}

TEST(Martingale, CalderonZygmundExample) {
  const CubeFunction f(2, {4, 0, 0, 0});
  const auto blocks = cz_blocks(f, 1.5);
  ASSERT_EQ(blocks.size(), 1u);
  EXPECT_EQ(blocks[0], (DyadicBlock{1, 0}));
  EXPECT_TRUE(cz_blocks(f, 4.0).empty());
  EXPECT_EQ(cz_blocks(f, 0.5), (std::vector<DyadicBlock>{{0, 0}}));
  EXPECT_THROW(cz_blocks(f, 0.0), InvalidArgument);
}

TEST(Martingale, CalderonZygmundCoversSuperlevelSet) {
  for (int t = 0; t < 60; ++t) {
    Rng rng = make_rng(33, t);
    const int ell = 1 + t % 8;
    const CubeFunction f = random_function(ell, static_cast<Ensemble>(t % 3), rng);
    const double lambda = 0.3 * sup_norm(f) + 1e-3;
    const auto blocks = cz_blocks(f, lambda);
    std::vector<int> cover(f.size(), 0);
    for (const auto& b : blocks) {
      for (std::size_t p = 0; p < f.size(); ++p) cover[p] += b.contains(p) ? 1 : 0;
    }
    std::vector<std::size_t> covered;
    for (std::size_t p = 0; p < f.size(); ++p) {
      EXPECT_LE(cover[p], 1);
      if (cover[p] == 1) covered.push_back(p);
    }
    EXPECT_EQ(covered, superlevel_set(f, lambda).members);
    // distinct maximal blocks never meet
    for (std::size_t i = 1; i < blocks.size(); ++i) {
      EXPECT_EQ(relate(blocks[i - 1], blocks[i]), BlockRelation::kDisjoint);
    }
  }
}

TEST(Martingale, WeakTypeBound) {
  for (int t = 0; t < 200; ++t) {
    Rng rng = make_rng(34, t);
    const CubeFunction f = random_function(1 + t % 10, static_cast<Ensemble>(t % 3), rng);
    const double lambda = sup_norm(f) * (0.05 + 0.9 * (t % 17) / 17.0);
    EXPECT_LE(lambda * superlevel_set(f, lambda).measure, lp_norm(f, 1.0) * (1 + 1e-12));
    EXPECT_LE(lambda * superlevel_set(f, 2 * lambda).measure,
              lp_norm(truncate_above(f, lambda), 1.0) * (1 + 1e-12));
  }
}

TEST(Martingale, TruncateAbove) {
  const CubeFunction f(2, {3, -1, 0.5, -2});
  EXPECT_EQ(truncate_above(f, 1.0), CubeFunction(2, {3, 0, 0, -2}));
}

TEST(Martingale, SplitAndDependence) {
  const CubeFunction f(2, {2, 0, 0, -2});
  EXPECT_TRUE(depends_only_on_first(f, 2));
  EXPECT_FALSE(depends_only_on_first(f, 1));
  EXPECT_TRUE(depends_only_on_first(conditional_expectation(f, 1), 1));

  const MartingaleSplit s = martingale_split(f, 1);
  EXPECT_TRUE(depends_only_on_first(s.head, 1));
  EXPECT_TRUE(depends_only_on_first(s.slope, 1));
  EXPECT_LE(max_abs_difference(s.head + rademacher(2, 2) * s.slope, f), 1e-15);
  EXPECT_EQ(s.head, conditional_expectation(f, 1));

  const CubeFunction g(2, {1, 2, 3, 4});
  EXPECT_THROW(martingale_split(g, 0), InvalidArgument);
}

TEST(Martingale, DifferencesAreOrthogonal) {
  Rng rng = make_rng(35);
  const CubeFunction f = random_function(8, Ensemble::kGaussian, rng);
  const auto d = martingale_differences(f);
  ASSERT_EQ(d.size(), 9u);
  CubeFunction sum = CubeFunction::zero(8);
  for (std::size_t a = 0; a < d.size(); ++a) {
    sum = sum + d[a];
    for (std::size_t b = a + 1; b < d.size(); ++b) EXPECT_NEAR(inner_product(d[a], d[b]), 0.0, 1e-13);
  }
  EXPECT_LE(max_abs_difference(sum, f), 1e-12);
}

}  // namespace
}  // namespace cubelab
