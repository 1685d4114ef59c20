#pragma once

// Data-parallel inner loops. Each kernel exists twice: `serial` is the plain
// reference kept for tests and benchmarks, `omp` is what the library calls.
// Both take the same arguments and agree up to floating-point reassociation
// (exactly, for the kernels that only move or compare values).
//
// Reductions in `omp` use fixed-size chunks folded in index order, so their
// results do not depend on the number of threads.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cubelab::kernels {

// Packed dyadic averages: level k (0 <= k <= ell) stores 2^k values, one per
// prefix of the first k coordinates, at offset 2^k - 1. Level ell is f.
inline std::size_t pyramid_offset(int level) noexcept {
  return (std::size_t{1} << level) - 1;
}
inline std::size_t pyramid_size(int ell) noexcept {
  return (std::size_t{2} << ell) - 1;
}

// Best sign vector for max_w sum_j |sum_l a[j][l] w_l| over w with w_{n} = +1.
// `w_bits` has bit (l) set when w_{l+1} = -1, matching the cube encoding.
struct SignSearchResult {
  double value = 0.0;
  std::uint64_t w_bits = 0;
};

inline constexpr std::size_t kReductionChunk = 4096;

namespace serial {

// Unnormalized Walsh-Hadamard transform in the subset-bitmask (Sylvester)
// order: out[I] = sum_b in[b] * (-1)^popcount(I & b). data.size() = 2^ell.
void fwht(std::span<double> data);

// Fills `pyramid` (pyramid_size(ell) entries) from f values (2^ell entries).
void expectation_pyramid(std::span<const double> values, int ell,
                         std::span<double> pyramid);

// out[b] = max_k |E_k(f)(b)|.
void maximal_from_pyramid(std::span<const double> pyramid, int ell,
                          std::span<double> out);

// out[b] = sqrt(E_0^2 + sum_k (E_k - E_{k-1})^2) at b.
void square_from_pyramid(std::span<const double> pyramid, int ell,
                         std::span<double> out);

// sum |v_i|^p.
double sum_abs_pow(std::span<const double> v, double p);

// Row-major m x n matrix. Brute force: every w is evaluated from scratch.
SignSearchResult max_sign_sum(std::span<const double> a, int m, int n);

}  // namespace serial

namespace omp {

void fwht(std::span<double> data);
void expectation_pyramid(std::span<const double> values, int ell,
                         std::span<double> pyramid);
void maximal_from_pyramid(std::span<const double> pyramid, int ell,
                          std::span<double> out);
void square_from_pyramid(std::span<const double> pyramid, int ell,
                         std::span<double> out);
// p = 1, 1.5, 2, 3, 4 avoid std::pow.
double sum_abs_pow(std::span<const double> v, double p);

// Gray-code walk inside fixed-size blocks of w; each block starts from a
// fresh evaluation so rounding drift stays bounded. Candidates are
// re-evaluated from scratch before they are compared across blocks.
SignSearchResult max_sign_sum(std::span<const double> a, int m, int n);

}  // namespace omp

}  // namespace cubelab::kernels
