#include <gtest/gtest.h>

#include <cmath>

#include "cubelab/error.hpp"
#include "cubelab/random.hpp"
#include "cubelab/walsh.hpp"
#include "oracles.hpp"

namespace cubelab {
namespace {

std::vector<double> to_vec(const CubeFunction& f) { return {f.values().begin(), f.values().end()}; }

TEST(Walsh, RademacherTables) {
  EXPECT_EQ(rademacher(2, 1), CubeFunction(2, {1, -1, 1, -1}));
  EXPECT_EQ(rademacher(2, 2), CubeFunction(2, {1, 1, -1, -1}));
  EXPECT_EQ(walsh_function(2, 0b11), CubeFunction(2, {1, -1, -1, 1}));
  EXPECT_EQ(walsh_function(3, 0), CubeFunction::constant(3, 1.0));
  EXPECT_THROW(rademacher(2, 3), InvalidArgument);
  EXPECT_THROW(walsh_function(2, 4), InvalidArgument);
}

TEST(Walsh, WalshFunctionIsProductOfRademachers) {
  const int ell = 5;
  for (SubsetMask s = 0; s < 32; ++s) {
    CubeFunction prod = CubeFunction::constant(ell, 1.0);
    for (int j = 1; j <= ell; ++j) {
      if ((s >> (j - 1)) & 1U) prod = prod * rademacher(ell, j);
    }
    EXPECT_EQ(walsh_function(ell, s), prod) << "subset " << s;
  }
}

TEST(Walsh, AnalyzeMatchesDirectCoefficients) {
  for (int ell = 1; ell <= 7; ++ell) {
    Rng rng = make_rng(11, ell);
    const CubeFunction f = random_function(ell, Ensemble::kGaussian, rng);
    const WalshSpectrum s = analyze(f);
    for (SubsetMask i = 0; i < cube_size(ell); ++i) {
      EXPECT_NEAR(s[i], oracle::walsh_coefficient(to_vec(f), ell, i), 1e-13);
    }
  }
}

TEST(Walsh, RoundTripAndParseval) {
  for (int ell = 1; ell <= 12; ++ell) {
    Rng rng = make_rng(12, ell);
    const CubeFunction f = random_function(ell, static_cast<Ensemble>(ell % 3), rng);
    const WalshSpectrum s = analyze(f);
    EXPECT_LE(max_abs_difference(synthesize(s), f), 1e-12);
    double energy = 0.0;
    for (double c : s.coeffs()) energy += c * c;
    EXPECT_NEAR(energy, inner_product(f, f), 1e-12 * std::max(1.0, energy));
  }
}

TEST(Walsh, RademacherSpanSpectrum) {
  const std::vector<double> a = {0.5, -2.0, 1.25};
  const CubeFunction f = rademacher_span(a);
  const WalshSpectrum s = analyze(f);
  for (SubsetMask i = 0; i < 8; ++i) {
    double expect = 0.0;
    if (i == 1) expect = a[0];
    if (i == 2) expect = a[1];
    if (i == 4) expect = a[2];
    EXPECT_NEAR(s[i], expect, 1e-15);
  }
  EXPECT_THROW(rademacher_span(std::vector<double>{}), InvalidArgument);
}

TEST(Walsh, SpectrumValidation) {
  EXPECT_THROW(WalshSpectrum(2, {1.0, 2.0}), InvalidArgument);
  EXPECT_THROW(WalshSpectrum(0, {1.0}), InvalidArgument);
}

}  // namespace
}  // namespace cubelab
