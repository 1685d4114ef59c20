#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cubelab/cube.hpp"

namespace cubelab {

// N_k(x): the points agreeing with x in coordinates 1..k. `prefix` holds
// those k coordinates in the cube encoding (bits k and above are zero).
struct DyadicBlock {
  int level = 0;
  std::uint32_t prefix = 0;

  bool contains(std::size_t point) const noexcept {
    const std::size_t mask = (std::size_t{1} << level) - 1;
    return (point & mask) == prefix;
  }
  std::size_t point_count(int ell) const noexcept {
    return std::size_t{1} << (ell - level);
  }
  double measure() const noexcept { return std::ldexp(1.0, -level); }

  // Block containing `point` at the given level.
  static DyadicBlock of(std::size_t point, int level) noexcept {
    const std::size_t mask = (std::size_t{1} << level) - 1;
    return {level, static_cast<std::uint32_t>(point & mask)};
  }

  friend bool operator==(const DyadicBlock&, const DyadicBlock&) = default;
};

enum class BlockRelation { kEqual, kInside, kContains, kDisjoint };

// How `a` sits relative to `b`. Dyadic blocks are nested or disjoint, so
// this is total.
BlockRelation relate(const DyadicBlock& a, const DyadicBlock& b) noexcept;

// Strict superlevel set {x : M(f)(x) > lambda} with normalized measure.
struct LevelSet {
  double lambda = 0.0;
  std::vector<std::size_t> members;
  double measure = 0.0;
};

// All conditional expectations E_0(f) .. E_ell(f), stored compactly: level k
// keeps one value per level-k block.
class ExpectationPyramid {
 public:
  explicit ExpectationPyramid(const CubeFunction& f);

  int ell() const noexcept { return ell_; }
  // 2^k averages indexed by block prefix.
  std::span<const double> level(int k) const;
  double at(int k, std::size_t point) const;
  std::span<const double> packed() const noexcept { return packed_; }
  CubeFunction expand(int k) const;

 private:
  int ell_;
  std::vector<double> packed_;
};

// Average of f over N_k(x), as a function of x. Requires 0 <= k <= ell.
CubeFunction conditional_expectation(const CubeFunction& f, int k);

// True when f depends only on coordinates 1..k, i.e. E_k(f) = f within tol.
bool depends_only_on_first(const CubeFunction& f, int k, double tol = 1e-10);

struct MartingaleSplit {
  CubeFunction head;   // E_k(f)
  CubeFunction slope;  // coefficient of r_{k+1}
};

// f = head + r_{k+1} * slope with both parts depending on coordinates 1..k.
// Requires 0 <= k < ell and f depending only on coordinates 1..k+1.
MartingaleSplit martingale_split(const CubeFunction& f, int k);

// M(f)(x) = max_k |E_k(f)(x)|.
CubeFunction maximal_function(const CubeFunction& f);

LevelSet superlevel_set(const CubeFunction& f, double lambda);

// Maximal dyadic blocks whose |average of f| exceeds lambda, found by a
// top-down stopping-time scan. Blocks come out in depth-first order with the
// x_{k+1} = +1 child visited first.
std::vector<DyadicBlock> cz_blocks(const CubeFunction& f, double lambda);

// f' = f where |f| > lambda, 0 elsewhere.
CubeFunction truncate_above(const CubeFunction& f, double lambda);

// S(f)(x) = (E_0^2 + sum_k (E_k - E_{k-1})^2)^(1/2) at x.
CubeFunction square_function(const CubeFunction& f);

// E_0(f), E_1(f) - E_0(f), ..., E_ell(f) - E_{ell-1}(f).
std::vector<CubeFunction> martingale_differences(const CubeFunction& f);

}  // namespace cubelab
