#include "cubelab/cube.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cubelab/error.hpp"
#include "cubelab/kernels.hpp"

namespace cubelab {
namespace {

void require_same_cube(const CubeFunction& f, const CubeFunction& g) {
  if (f.ell() != g.ell()) {
    throw InvalidArgument("ell", "dimension mismatch (" + std::to_string(f.ell()) +
                                     " vs " + std::to_string(g.ell()) + ")");
  }
}

template <typename Op>
CubeFunction pointwise(const CubeFunction& f, const CubeFunction& g, Op op) {
  require_same_cube(f, g);
  std::vector<double> out(f.size());
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = op(f[b], g[b]);
  return CubeFunction(f.ell(), std::move(out));
}

}  // namespace

CubeFunction::CubeFunction(int ell, std::vector<double> values)
    : ell_(ell), values_(std::move(values)) {
  if (ell < 1 || ell > kMaxEll) {
    throw InvalidArgument("ell", "must lie in [1, " + std::to_string(kMaxEll) +
                                     "], got " + std::to_string(ell));
  }
  if (values_.size() != cube_size(ell)) {
    throw InvalidArgument("values", "expected 2^" + std::to_string(ell) + " = " +
                                        std::to_string(cube_size(ell)) +
                                        " entries, got " +
                                        std::to_string(values_.size()));
  }
  for (std::size_t b = 0; b < values_.size(); ++b) {
    if (!std::isfinite(values_[b])) {
      throw InvalidArgument("values", "entry " + std::to_string(b) + " is not finite");
    }
  }
}

CubeFunction CubeFunction::constant(int ell, double c) {
  if (ell < 1 || ell > kMaxEll) {
    throw InvalidArgument("ell", "must lie in [1, " + std::to_string(kMaxEll) + "]");
  }
  return CubeFunction(ell, std::vector<double>(cube_size(ell), c));
}

CubeFunction make_function(int ell, std::vector<double> values) {
  return CubeFunction(ell, std::move(values));
}

double lp_norm(const CubeFunction& f, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw InvalidArgument("p", "norm requires p >= 1 (use lp_quantity for 0 < p < 1)");
  }
  if (std::isinf(p)) return sup_norm(f);
  return lp_quantity(f, p);
}

double lp_quantity(const CubeFunction& f, double p) {
  if (std::isnan(p) || p <= 0.0) throw InvalidArgument("p", "must be positive");
  if (std::isinf(p)) return sup_norm(f);
  const double mean = kernels::omp::sum_abs_pow(f.values(), p) /
                      static_cast<double>(f.size());
  if (p == 1.0) return mean;
  if (p == 2.0) return std::sqrt(mean);
  return std::pow(mean, 1.0 / p);
}

double sup_norm(const CubeFunction& f) {
  double best = 0.0;
  for (double x : f.values()) best = std::max(best, std::abs(x));
  return best;
}

double inner_product(const CubeFunction& f, const CubeFunction& g) {
  require_same_cube(f, g);
  double sum = 0.0;
  for (std::size_t b = 0; b < f.size(); ++b) sum += f[b] * g[b];
  return sum / static_cast<double>(f.size());
}

CubeFunction operator+(const CubeFunction& f, const CubeFunction& g) {
  return pointwise(f, g, [](double x, double y) { return x + y; });
}

CubeFunction operator-(const CubeFunction& f, const CubeFunction& g) {
  return pointwise(f, g, [](double x, double y) { return x - y; });
}

CubeFunction operator*(const CubeFunction& f, const CubeFunction& g) {
  return pointwise(f, g, [](double x, double y) { return x * y; });
}

CubeFunction operator*(double c, const CubeFunction& f) {
  std::vector<double> out(f.values().begin(), f.values().end());
  for (double& x : out) x *= c;
  return CubeFunction(f.ell(), std::move(out));
}

double max_abs_difference(const CubeFunction& f, const CubeFunction& g) {
  require_same_cube(f, g);
  double worst = 0.0;
  for (std::size_t b = 0; b < f.size(); ++b) worst = std::max(worst, std::abs(f[b] - g[b]));
  return worst;
}

}  // namespace cubelab
