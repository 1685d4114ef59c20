#include <gtest/gtest.h>

#include <cmath>

#include "cubelab/cube.hpp"
#include "cubelab/error.hpp"

namespace cubelab {
namespace {

std::string field_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InvalidArgument& e) {
    return e.field();
  }
  return "<no throw>";
}

TEST(CubeFunction, RejectsBadShapes) {
  EXPECT_EQ(field_of([] { CubeFunction(0, {1.0}); }), "ell");
  EXPECT_EQ(field_of([] { CubeFunction(kMaxEll + 1, {}); }), "ell");
  EXPECT_EQ(field_of([] { CubeFunction(2, {1.0, 2.0, 3.0}); }), "values");
  EXPECT_EQ(field_of([] { CubeFunction(1, {1.0, std::nan("")}); }), "values");
  EXPECT_EQ(field_of([] { CubeFunction(1, {kInfinity, 0.0}); }), "values");
}

TEST(CubeFunction, CoordinateEncoding) {
  // bit j-1 clear means x_j = +1
  EXPECT_EQ(coordinate(0b000, 1), 1);
  EXPECT_EQ(coordinate(0b001, 1), -1);
  EXPECT_EQ(coordinate(0b010, 1), 1);
  EXPECT_EQ(coordinate(0b010, 2), -1);
  EXPECT_EQ(coordinate(0b100, 3), -1);
  EXPECT_EQ(cube_size(5), 32u);
}

TEST(CubeFunction, NormsOfSmallExample) {
  const CubeFunction f(2, {1.0, -1.0, 3.0, 1.0});
  EXPECT_DOUBLE_EQ(lp_norm(f, 1.0), 1.5);
  EXPECT_DOUBLE_EQ(lp_norm(f, 2.0), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(lp_norm(f, kInfinity), 3.0);
  EXPECT_DOUBLE_EQ(sup_norm(f), 3.0);
  EXPECT_NEAR(lp_norm(f, 3.0), std::cbrt(30.0 / 4.0), 1e-15);
  EXPECT_NEAR(lp_quantity(f, 0.5), std::pow((3.0 + std::sqrt(3.0)) / 4.0, 2.0), 1e-15);
}

TEST(CubeFunction, NormRejectsSubunitExponent) {
  const CubeFunction f = CubeFunction::constant(3, 2.0);
  EXPECT_EQ(field_of([&] { lp_norm(f, 0.5); }), "p");
  EXPECT_EQ(field_of([&] { lp_quantity(f, 0.0); }), "p");
  EXPECT_EQ(field_of([&] { lp_quantity(f, std::nan("")); }), "p");
  EXPECT_DOUBLE_EQ(lp_quantity(f, 0.25), 2.0);
}

TEST(CubeFunction, NormsAreMonotoneInP) {
  const CubeFunction f(3, {0.5, -2.0, 0.0, 1.0, 3.0, -0.25, 1.5, 0.0});
  double prev = 0.0;
  for (double p : {1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0, 10.0, kInfinity}) {
    const double v = lp_norm(f, p);
    EXPECT_GE(v, prev * (1 - 1e-14)) << "p = " << p;
    prev = v;
  }
}

TEST(CubeFunction, ArithmeticAndInnerProduct) {
  const CubeFunction f(1, {1.0, 2.0});
  const CubeFunction g(1, {3.0, -1.0});
  EXPECT_EQ((f + g), CubeFunction(1, {4.0, 1.0}));
  EXPECT_EQ((f - g), CubeFunction(1, {-2.0, 3.0}));
  EXPECT_EQ((f * g), CubeFunction(1, {3.0, -2.0}));
  EXPECT_EQ((2.0 * f), CubeFunction(1, {2.0, 4.0}));
  EXPECT_DOUBLE_EQ(inner_product(f, g), 0.5);
  EXPECT_DOUBLE_EQ(max_abs_difference(f, g), 3.0);
  EXPECT_EQ(field_of([&] { inner_product(f, CubeFunction::zero(2)); }), "ell");
}

}  // namespace
}  // namespace cubelab
