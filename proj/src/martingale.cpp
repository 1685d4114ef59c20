#include "cubelab/martingale.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cubelab/error.hpp"
#include "cubelab/kernels.hpp"

namespace cubelab {
namespace {

void require_level(int k, int lo, int hi) {
  if (k < lo || k > hi) {
    throw InvalidArgument("k", "level " + std::to_string(k) + " outside [" +
                                   std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InvalidArgument("lambda", "must be a positive finite number");
  }
}

}  // namespace

BlockRelation relate(const DyadicBlock& a, const DyadicBlock& b) noexcept {
  const int common = std::min(a.level, b.level);
  const std::uint32_t mask = (std::uint32_t{1} << common) - 1;
  if ((a.prefix & mask) != (b.prefix & mask)) return BlockRelation::kDisjoint;
  if (a.level == b.level) return BlockRelation::kEqual;
  return a.level > b.level ? BlockRelation::kInside : BlockRelation::kContains;
}

ExpectationPyramid::ExpectationPyramid(const CubeFunction& f)
    : ell_(f.ell()), packed_(kernels::pyramid_size(f.ell())) {
  kernels::omp::expectation_pyramid(f.values(), ell_, packed_);
}

std::span<const double> ExpectationPyramid::level(int k) const {
  require_level(k, 0, ell_);
  return std::span<const double>(packed_).subspan(kernels::pyramid_offset(k),
                                                  std::size_t{1} << k);
}

double ExpectationPyramid::at(int k, std::size_t point) const {
  const std::size_t mask = (std::size_t{1} << k) - 1;
  return packed_[kernels::pyramid_offset(k) + (point & mask)];
}

CubeFunction ExpectationPyramid::expand(int k) const {
  require_level(k, 0, ell_);
  std::vector<double> out(cube_size(ell_));
  const double* lvl = packed_.data() + kernels::pyramid_offset(k);
  const std::size_t mask = (std::size_t{1} << k) - 1;
  for (std::size_t b = 0; b < out.size(); ++b) out[b] = lvl[b & mask];
  return CubeFunction(ell_, std::move(out));
}

CubeFunction conditional_expectation(const CubeFunction& f, int k) {
  require_level(k, 0, f.ell());
  return ExpectationPyramid(f).expand(k);
}

bool depends_only_on_first(const CubeFunction& f, int k, double tol) {
  require_level(k, 0, f.ell());
  return max_abs_difference(conditional_expectation(f, k), f) <= tol;
}

MartingaleSplit martingale_split(const CubeFunction& f, int k) {
  require_level(k, 0, f.ell() - 1);
  if (!depends_only_on_first(f, k + 1)) {
    throw InvalidArgument("f", "does not depend only on the first " +
                                   std::to_string(k + 1) + " coordinates");
  }
  // At the two halves of each level-k block (x_{k+1} = +1 / -1):
  // head = (f+ + f-)/2, slope = (f+ - f-)/2.
  const std::size_t n = f.size();
  const std::size_t bit = std::size_t{1} << k;
  std::vector<double> head(n), slope(n);
  for (std::size_t b = 0; b < n; ++b) {
    const double plus = f[b & ~bit];
    const double minus = f[b | bit];
    head[b] = 0.5 * (plus + minus);
    slope[b] = 0.5 * (plus - minus);
  }
  return {CubeFunction(f.ell(), std::move(head)), CubeFunction(f.ell(), std::move(slope))};
}

CubeFunction maximal_function(const CubeFunction& f) {
  ExpectationPyramid pyramid(f);
  std::vector<double> out(f.size());
  kernels::omp::maximal_from_pyramid(pyramid.packed(), f.ell(), out);
  return CubeFunction(f.ell(), std::move(out));
}

LevelSet superlevel_set(const CubeFunction& f, double lambda) {
  require_lambda(lambda);
  const CubeFunction m = maximal_function(f);
  LevelSet set;
  set.lambda = lambda;
  for (std::size_t b = 0; b < m.size(); ++b) {
    if (m[b] > lambda) set.members.push_back(b);
  }
  set.measure = static_cast<double>(set.members.size()) / static_cast<double>(f.size());
  return set;
}

std::vector<DyadicBlock> cz_blocks(const CubeFunction& f, double lambda) {
  require_lambda(lambda);
  const ExpectationPyramid pyramid(f);
  const int ell = f.ell();
  std::vector<DyadicBlock> out;
  std::vector<DyadicBlock> stack{{0, 0}};
  while (!stack.empty()) {
    const DyadicBlock block = stack.back();
    stack.pop_back();
    if (std::abs(pyramid.level(block.level)[block.prefix]) > lambda) {
      out.push_back(block);
      continue;
    }
    if (block.level == ell) continue;
    const std::uint32_t bit = std::uint32_t{1} << block.level;
    stack.push_back({block.level + 1, block.prefix | bit});
    stack.push_back({block.level + 1, block.prefix});
  }
  return out;
}

CubeFunction truncate_above(const CubeFunction& f, double lambda) {
  require_lambda(lambda);
  std::vector<double> out(f.values().begin(), f.values().end());
  for (double& x : out) {
    if (!(std::abs(x) > lambda)) x = 0.0;
  }
  return CubeFunction(f.ell(), std::move(out));
}

CubeFunction square_function(const CubeFunction& f) {
  ExpectationPyramid pyramid(f);
  std::vector<double> out(f.size());
  kernels::omp::square_from_pyramid(pyramid.packed(), f.ell(), out);
  return CubeFunction(f.ell(), std::move(out));
}

std::vector<CubeFunction> martingale_differences(const CubeFunction& f) {
  const ExpectationPyramid pyramid(f);
  std::vector<CubeFunction> out;
  out.reserve(static_cast<std::size_t>(f.ell()) + 1);
  out.push_back(pyramid.expand(0));
  for (int k = 1; k <= f.ell(); ++k) {
    out.push_back(pyramid.expand(k) - pyramid.expand(k - 1));
  }
  return out;
}

}  // namespace cubelab
