#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cubelab/error.hpp"
#include "cubelab/gaussian.hpp"
#include "cubelab/quadrature.hpp"
#include "oracles.hpp"

namespace cubelab {
namespace {

TEST(Gaussian, GammaAgreesWithLibrary) {
  for (double x = -4.75; x <= 30.0; x += 0.125) {
    if (x <= 0.0 && x == std::floor(x)) continue;
    const double ref = std::tgamma(x);
    EXPECT_NEAR(gamma_function(x), ref, 1e-13 * std::abs(ref)) << "x = " << x;
  }
  EXPECT_NEAR(gamma_function(0.5), std::sqrt(std::numbers::pi), 1e-15);
}

TEST(Gaussian, ClosedFormValues) {
  EXPECT_NEAR(gaussian_moment(0.0).value, 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(gaussian_moment(0.0).root, 1.0);
  EXPECT_NEAR(gaussian_moment(1.0).value, 1.0 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(gaussian_moment(2.0).value, 0.15915494309189535, 4e-16);
  EXPECT_NEAR(gaussian_moment(4.0).value, 0.07599088773175333, 4e-16);
  EXPECT_NEAR(gaussian_moment(2.0).root, 0.3989422804014327, 1e-15);
}

TEST(Gaussian, QuadratureMatchesClosedForm) {
  for (double p : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 7.5}) {
    const double closed = gaussian_moment(p).value;
    EXPECT_NEAR(gaussian_moment_quadrature(p), closed, 1e-10 * closed) << "p = " << p;
    const double simpson = 2.0 * oracle::simpson(
        [p](double x) { return std::pow(x, p) * std::exp(-std::numbers::pi * x * x); }, 0.0, 8.0, 20000);
    if (p >= 1.0) EXPECT_NEAR(simpson, closed, 1e-9 * closed) << "p = " << p;
  }
}

TEST(Gaussian, LinearFunctional) {
  const std::vector<double> v = {3.0, 4.0};
  EXPECT_NEAR(linear_functional_moment(v, 2.0), 1.9947114020071635, 1e-14);
  EXPECT_NEAR(linear_functional_moment_quadrature(v, 2.0), 1.9947114020071635, 1e-9);
  const std::vector<double> w = {1.0, -2.0, 0.5};
  EXPECT_NEAR(linear_functional_moment_quadrature(w, 3.0), linear_functional_moment(w, 3.0), 1e-7);
  EXPECT_THROW(linear_functional_moment_quadrature(std::vector<double>(4, 1.0), 2.0), InvalidArgument);
}

TEST(Gaussian, MassFactorizes) {
  for (int n = 1; n <= 3; ++n) EXPECT_NEAR(gaussian_mass_quadrature(n), 1.0, 1e-10) << "n = " << n;
  EXPECT_THROW(gaussian_mass_quadrature(4), InvalidArgument);
}

TEST(Gaussian, KhintchineLimit) {
  EXPECT_NEAR(gaussian_khintchine_limit(4.0), std::pow(3.0, 0.25), 1e-13);
  EXPECT_NEAR(gaussian_khintchine_limit(2.0), 1.0, 1e-14);
  EXPECT_THROW(gaussian_moment(-1.0), InvalidArgument);
  EXPECT_THROW(gaussian_moment(std::nan("")), InvalidArgument);
}

TEST(Quadrature, GaussLegendreIntegratesPolynomials) {
  const auto rule = gauss_legendre(10);
  for (int k = 0; k <= 19; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
    const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
    EXPECT_NEAR(s, exact, 1e-14) << "degree " << k;
  }
  EXPECT_NEAR(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi), 2.0, 1e-13);
}

}  // namespace
}  // namespace cubelab
