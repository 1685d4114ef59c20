#include "cubelab/walsh.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "cubelab/error.hpp"
#include "cubelab/kernels.hpp"

namespace cubelab {

WalshSpectrum::WalshSpectrum(int ell, std::vector<double> coeffs)
    : ell_(ell), coeffs_(std::move(coeffs)) {
  if (ell < 1 || ell > kMaxEll) throw InvalidArgument("ell", "out of range");
  if (coeffs_.size() != cube_size(ell)) {
    throw InvalidArgument("coeffs", "expected " + std::to_string(cube_size(ell)) +
                                        " entries, got " + std::to_string(coeffs_.size()));
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw InvalidArgument("coeffs", "non-finite entry");
  }
}

CubeFunction rademacher(int ell, int j) {
  if (j < 1 || j > ell) throw InvalidArgument("j", "coordinate index out of range");
  return walsh_function(ell, SubsetMask{1} << (j - 1));
}

CubeFunction walsh_function(int ell, SubsetMask subset) {
  if (ell < 1 || ell > kMaxEll) throw InvalidArgument("ell", "out of range");
  if (subset >= cube_size(ell)) {
    throw InvalidArgument("subset", "bitmask " + std::to_string(subset) +
                                        " exceeds 2^" + std::to_string(ell));
  }
  std::vector<double> values(cube_size(ell));
  for (std::size_t b = 0; b < values.size(); ++b) {
    values[b] = (std::popcount(subset & static_cast<SubsetMask>(b)) & 1) ? -1.0 : 1.0;
  }
  return CubeFunction(ell, std::move(values));
}

WalshSpectrum analyze(const CubeFunction& f) {
  std::vector<double> scratch(f.values().begin(), f.values().end());
  kernels::omp::fwht(scratch);
  const double scale = 1.0 / static_cast<double>(scratch.size());
  for (double& c : scratch) c *= scale;
  return WalshSpectrum(f.ell(), std::move(scratch));
}

CubeFunction synthesize(const WalshSpectrum& s) {
  std::vector<double> scratch(s.coeffs().begin(), s.coeffs().end());
  kernels::omp::fwht(scratch);
  return CubeFunction(s.ell(), std::move(scratch));
}

CubeFunction rademacher_span(std::span<const double> a) {
  if (a.empty()) throw InvalidArgument("a", "coefficient vector is empty");
  if (a.size() > static_cast<std::size_t>(kMaxEll)) {
    throw InvalidArgument("a", "more than " + std::to_string(kMaxEll) + " coefficients");
  }
  const int ell = static_cast<int>(a.size());
  // Doubling: values on B_k extend to B_{k+1} by +/- a_{k+1}.
  std::vector<double> values(cube_size(ell), 0.0);
  values[0] = a[0];
  values[1] = -a[0];
  for (int k = 1; k < ell; ++k) {
    const std::size_t width = std::size_t{1} << k;
    for (std::size_t b = 0; b < width; ++b) {
      values[b + width] = values[b] - a[k];
      values[b] += a[k];
    }
  }
  return CubeFunction(ell, std::move(values));
}

}  // namespace cubelab
