#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cubelab/bilinear.hpp"
#include "cubelab/error.hpp"
#include "cubelab/random.hpp"
#include "oracles.hpp"

namespace cubelab {
namespace {

RealMatrix random_matrix(int m, int n, std::uint64_t stream) {
  Rng rng = make_rng(61, stream);
  return RealMatrix(m, n, gaussian_vector(static_cast<std::size_t>(m) * n, rng));
}

TEST(Bilinear, SignNormMatchesFullEnumeration) {
  for (int t = 0; t < 50; ++t) {
    const int m = 1 + t % 5, n = 1 + (t / 5) % 6;
    const RealMatrix a = random_matrix(m, n, t);
    const std::vector<double> entries(a.data().begin(), a.data().end());
    const double brute = oracle::sign_norm(entries, m, n);
    const SignNorm s = infty_to_one_norm(a);
    EXPECT_NEAR(s.norm, brute, 1e-12 * brute);
    EXPECT_NEAR(sign_bilinear(a, s.v_star, s.w_star), s.norm, 1e-12 * brute);
    EXPECT_EQ(s.w_star.back(), 1);
  }
}

TEST(Bilinear, ChshNormAndTieBreak) {
  const RealMatrix a = RealMatrix::from_rows({{1, 1}, {1, -1}});
  const SignNorm s = infty_to_one_norm(a);
  EXPECT_DOUBLE_EQ(s.norm, 2.0);
  EXPECT_EQ(s.w_star, (std::vector<int>{1, 1}));
  EXPECT_EQ(s.v_star, (std::vector<int>{1, 1}));
}

TEST(Bilinear, NonnegativeMatrixNormIsEntrySum) {
  const RealMatrix a = RealMatrix::from_rows({{0.5, 2.0, 0.0}, {1.0, 0.25, 3.0}});
  EXPECT_EQ(infty_to_one_norm(a).norm, 6.75);
}

TEST(Bilinear, ScalingAndRestriction) {
  const RealMatrix a = random_matrix(3, 4, 99);
  const double n = infty_to_one_norm(a).norm;
  EXPECT_NEAR(infty_to_one_norm(a.scaled(-2.5)).norm, 2.5 * n, 1e-12 * n);
  EXPECT_NEAR(infty_to_one_norm(restricted(a)).norm, 1.0, 1e-14);
  EXPECT_NEAR(infty_to_one_norm(a.transpose()).norm, n, 1e-12 * n);
  EXPECT_THROW(restricted(RealMatrix(2, 2, {0, 0, 0, 0})), InvalidArgument);
}

TEST(Bilinear, TraceDuality) {
  const RealMatrix a = RealMatrix::from_rows({{1, -2, 0}, {3, 0.5, -1}});
  const TraceDuality td = trace_duality(a);
  EXPECT_DOUBLE_EQ(td.sum_abs, 7.5);
  EXPECT_DOUBLE_EQ(td.witness_pairing, 7.5);
  EXPECT_EQ(td.witness, RealMatrix::from_rows({{1, 1}, {-1, 1}, {0, -1}}));
  EXPECT_DOUBLE_EQ(trace_pairing(a, td.witness), 7.5);
  EXPECT_THROW(trace_pairing(a, a), InvalidArgument);
}

TEST(Bilinear, ChshVectorValue) {
  GrothendieckOptions o;
  o.dim = 2;
  o.restarts = 16;
  o.seed = 3;
  const auto r = grothendieck_ratio(RealMatrix::from_rows({{1, 1}, {1, -1}}), o);
  EXPECT_NEAR(r.best.objective, 2.0 * std::numbers::sqrt2, 1e-9);
  EXPECT_NEAR(r.ratio, std::numbers::sqrt2, 1e-9);
  EXPECT_EQ(r.runs.size(), 17u);
  EXPECT_EQ(r.runs.front().kind, "sign");
  EXPECT_NEAR(bilinear_objective(RealMatrix::from_rows({{1, 1}, {1, -1}}), r.best), r.best.objective, 1e-12);
}

TEST(Bilinear, RatioBetweenOneAndBound) {
  for (int t = 0; t < 30; ++t) {
    const RealMatrix a = random_matrix(1 + t % 5, 1 + t % 4, 200 + t);
    GrothendieckOptions o;
    o.restarts = 6;
    o.seed = t;
    const auto r = grothendieck_ratio(a, o);
    EXPECT_GE(r.ratio, 1.0 - 1e-12);
    EXPECT_LE(r.ratio, kGrothendieckBound);
  }
}

TEST(Bilinear, AlternatingIsMonotoneAndExactInDimensionOne) {
  const RealMatrix a = random_matrix(4, 3, 300);
  double best = 0.0;
  for (std::uint32_t w = 0; w < 8; ++w) {
    GramConfiguration start;
    start.dim = 1;
    start.v.assign(4, {1.0});
    for (int l = 0; l < 3; ++l) start.w.push_back({((w >> l) & 1U) ? -1.0 : 1.0});
    const double initial = bilinear_objective(a, start);
    AlternatingTrace trace;
    const auto end = alternating_maximize(a, start, {}, &trace);
    EXPECT_GE(end.objective, initial - 1e-12);
    EXPECT_TRUE(trace.converged);
    best = std::max(best, end.objective);
  }
  EXPECT_NEAR(best, infty_to_one_norm(a).norm, 1e-12);
}

TEST(Bilinear, GrothendieckConstantValue) {
  EXPECT_NEAR(kGrothendieckBound, 2.3012989023072947, 1e-15);
  EXPECT_NEAR(kGrothendieckBound, std::sinh(std::numbers::pi / 2), 1e-15);
}

TEST(Bilinear, Validation) {
  EXPECT_THROW(RealMatrix(0, 2, {}), InvalidArgument);
  EXPECT_THROW(RealMatrix(2, 2, {1, 2, 3}), InvalidArgument);
  EXPECT_THROW(RealMatrix::from_rows({{1, 2}, {3}}), InvalidArgument);
  EXPECT_THROW(infty_to_one_norm(RealMatrix(1, kMaxExactSignDimension + 1,
                                            std::vector<double>(kMaxExactSignDimension + 1, 1.0))),
               InvalidArgument);
  GrothendieckOptions o;
  o.restarts = 0;
  EXPECT_THROW(grothendieck_ratio(RealMatrix::from_rows({{1}}), o), InvalidArgument);
}

}  // namespace
}  // namespace cubelab
