#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cubelab/error.hpp"
#include "cubelab/gaussian.hpp"
#include "cubelab/khintchine.hpp"
#include "cubelab/random.hpp"
#include "oracles.hpp"

namespace cubelab {
namespace {

TEST(Khintchine, EvenMomentSmallCases) {
  EXPECT_DOUBLE_EQ(even_moment(std::vector<double>{1, 1}, 2), 8.0);
  EXPECT_DOUBLE_EQ(even_moment(std::vector<double>{1, 1, 1}, 2), 21.0);
  EXPECT_DOUBLE_EQ(even_moment(std::vector<double>{2.0}, 3), 64.0);
  EXPECT_DOUBLE_EQ(even_moment(std::vector<double>{3, 4}, 1), 25.0);
}

TEST(Khintchine, EvenMomentMatchesEnumeration) {
  for (int t = 0; t < 60; ++t) {
    Rng rng = make_rng(41, t);
    const auto a = gaussian_vector(1 + t % 10, rng);
    const int s = 1 + t % kMaxMomentOrder;
    const double brute = oracle::cube_moment(a, 2.0 * s);
    EXPECT_NEAR(even_moment(a, s), brute, 1e-11 * brute);
    EXPECT_NEAR(cube_moment(a, 2.0 * s), brute, 1e-11 * brute);
  }
}

TEST(Khintchine, FourthMomentBound) {
  for (int t = 0; t < 2000; ++t) {
    Rng rng = make_rng(42, t);
    const auto a = gaussian_vector(1 + t % kMaxMomentEll, rng);
    double sq = 0.0;
    for (double x : a) sq += x * x;
    EXPECT_LE(even_moment(a, 2), 3.0 * sq * sq * (1 + 1e-12));
  }
}

TEST(Khintchine, BestEvenRatioClosedForm) {
  for (int ell = 1; ell <= 12; ++ell) {
    const auto r = best_ratio_even(ell, 2);
    EXPECT_NEAR(std::pow(r.ratio, 4.0), 3.0 - 2.0 / ell, 1e-9) << "ell = " << ell;
    EXPECT_LE(r.ratio, std::pow(3.0, 0.25));
    double norm = 0.0;
    for (double x : r.argvector) norm += x * x;
    EXPECT_NEAR(norm, 1.0, 1e-12);
    EXPECT_EQ(r.argvector.size(), static_cast<std::size_t>(ell));
  }
  EXPECT_NEAR(best_ratio_even(10, 2).ratio, 1.2935687276168015, 1e-9);
}

TEST(Khintchine, TwoCoordinateGridOracle) {
  const auto grid3 = oracle::two_coordinate_ratio(3.0, 20000);
  EXPECT_NEAR(best_ratio_high(2, 3.0).ratio, grid3.max, 1e-7);
  const auto grid1 = oracle::two_coordinate_ratio(1.0, 20000);
  EXPECT_NEAR(best_ratio_low(2, 1.0).ratio, grid1.min, 1e-7);
  EXPECT_NEAR(best_ratio_low(2, 1.0).ratio, std::numbers::sqrt2 / 2, 1e-9);
  const auto grid6 = oracle::two_coordinate_ratio(6.0, 20000);
  EXPECT_NEAR(best_ratio_even(2, 3).ratio, grid6.max, 1e-7);
}

TEST(Khintchine, ReverseConstant) {
  EXPECT_NEAR(holder_reverse_constant(1.0), std::sqrt(3.0), 1e-15);
  for (double q : {0.5, 1.0, 1.5, 1.9}) {
    EXPECT_NEAR(holder_reverse_constant(q), std::pow(3.0, (2.0 - q) / (2.0 * q)), 1e-13);
  }
  for (int ell = 1; ell <= 8; ++ell) {
    EXPECT_LE(1.0 / best_ratio_low(ell, 1.0).ratio, std::sqrt(3.0) + 1e-9);
  }
  EXPECT_THROW(holder_reverse_constant(2.0), InvalidArgument);
}

TEST(Khintchine, HighRatioDominatedByGaussian) {
  for (int ell = 1; ell <= 8; ++ell) {
    EXPECT_LE(best_ratio_high(ell, 3.0).ratio, gaussian_khintchine_limit(3.0) + 1e-12);
  }
}

TEST(Khintchine, DeterministicInSeed) {
  KhintchineOptions o;
  o.seed = 99;
  const auto a = best_ratio_low(5, 1.3, o);
  const auto b = best_ratio_low(5, 1.3, o);
  EXPECT_EQ(a.ratio, b.ratio);
  EXPECT_EQ(a.argvector, b.argvector);
  EXPECT_EQ(a.starts, b.starts);
}

TEST(Khintchine, Validation) {
  EXPECT_THROW(even_moment(std::vector<double>{}, 2), InvalidArgument);
  EXPECT_THROW(even_moment(std::vector<double>(kMaxMomentEll + 1, 1.0), 2), InvalidArgument);
  EXPECT_THROW(best_ratio_even(3, 1), InvalidArgument);
  EXPECT_THROW(best_ratio_even(3, kMaxMomentOrder + 1), InvalidArgument);
  EXPECT_THROW(best_ratio_high(3, 2.0), InvalidArgument);
  EXPECT_THROW(best_ratio_low(3, 2.0), InvalidArgument);
  EXPECT_THROW(best_ratio_low(0, 1.0), InvalidArgument);
  EXPECT_THROW(best_ratio_high(kMaxEnumerationEll + 1, 3.0), InvalidArgument);
}

}  // namespace
}  // namespace cubelab
