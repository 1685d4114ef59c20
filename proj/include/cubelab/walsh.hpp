#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cubelab/cube.hpp"

namespace cubelab {

// Subset I of {1..ell} as a bitmask: bit (j-1) set iff j is in I.
using SubsetMask = std::uint32_t;

// Coefficients of f in the Walsh basis, indexed by subset bitmask (not
// sequency order).
class WalshSpectrum {
 public:
  WalshSpectrum(int ell, std::vector<double> coeffs);

  int ell() const noexcept { return ell_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](SubsetMask subset) const { return coeffs_[subset]; }

 private:
  int ell_;
  std::vector<double> coeffs_;
};

// r_j on B_ell, j in [1, ell].
CubeFunction rademacher(int ell, int j);

// w_I = prod_{j in I} r_j; the constant 1 for the empty set.
CubeFunction walsh_function(int ell, SubsetMask subset);

// coefficient I = inner_product(f, w_I), via a fast Walsh-Hadamard transform
// on a private copy. The 2^-ell scale lives here, so synthesize is scale-free.
WalshSpectrum analyze(const CubeFunction& f);

// sum_I coeffs[I] w_I. Inverse of analyze.
CubeFunction synthesize(const WalshSpectrum& s);

// sum_j a_j r_j on B_ell with ell = a.size().
CubeFunction rademacher_span(std::span<const double> a);

}  // namespace cubelab
