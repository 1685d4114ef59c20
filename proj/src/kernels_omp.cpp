#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "cubelab/kernels.hpp"

namespace cubelab::kernels::omp {
namespace {

// Below this many points the fork/join overhead dominates.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

inline double abs_pow(double x, double p) {
  const double ax = std::abs(x);
  if (p == 1.0) return ax;
  if (p == 1.5) return ax * std::sqrt(ax);
  if (p == 2.0) return ax * ax;
  if (p == 3.0) return ax * ax * ax;
  if (p == 4.0) {
    const double sq = ax * ax;
    return sq * sq;
  }
  return std::pow(ax, p);
}

double evaluate_signs(std::span<const double> a, int m, int n, std::uint64_t w) {
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    double row = 0.0;
    const double* a_row = a.data() + static_cast<std::size_t>(j) * n;
    for (int l = 0; l < n; ++l) {
      row += ((w >> l) & 1U) ? -a_row[l] : a_row[l];
    }
    total += std::abs(row);
  }
  return total;
}

}  // namespace

void fwht(std::span<double> data) {
  const std::size_t n = data.size();
  if (n < 2) return;
  double* x = data.data();
  // Stages with h < block run inside cache-sized blocks; the butterflies and
  // their order per element match the serial transform exactly.
  const std::size_t block = std::min<std::size_t>(n, std::size_t{1} << 11);
  const std::size_t blocks = n / block;
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::size_t b = 0; b < blocks; ++b) {
    double* y = x + b * block;
    for (std::size_t h = 1; h < block; h <<= 1) {
      for (std::size_t i = 0; i < block; i += 2 * h) {
        for (std::size_t j = i; j < i + h; ++j) {
          const double u = y[j];
          const double v = y[j + h];
          y[j] = u + v;
          y[j + h] = u - v;
        }
      }
    }
  }
  for (std::size_t h = block; h < n; h <<= 1) {
    const int shift = std::countr_zero(h);
    const std::size_t half = n / 2;
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
    for (std::size_t t = 0; t < half; ++t) {
      const std::size_t j = ((t >> shift) << (shift + 1)) | (t & (h - 1));
      const double u = x[j];
      const double v = x[j + h];
      x[j] = u + v;
      x[j + h] = u - v;
    }
  }
}

void expectation_pyramid(std::span<const double> values, int ell,
                         std::span<double> pyramid) {
  const std::size_t n = values.size();
  // Even a disabled parallel region costs a runtime call per level.
  if (n < kParallelThreshold) {
    serial::expectation_pyramid(values, ell, pyramid);
    return;
  }
  double* top = pyramid.data() + pyramid_offset(ell);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::size_t b = 0; b < n; ++b) top[b] = values[b];

  for (int k = ell - 1; k >= 0; --k) {
    const std::size_t width = std::size_t{1} << k;
    const double* finer = pyramid.data() + pyramid_offset(k + 1);
    double* coarser = pyramid.data() + pyramid_offset(k);
#pragma omp parallel for schedule(static) if (width >= kParallelThreshold)
    for (std::size_t p = 0; p < width; ++p) {
      coarser[p] = 0.5 * (finer[p] + finer[p + width]);
    }
  }
}

void maximal_from_pyramid(std::span<const double> pyramid, int ell,
                          std::span<double> out) {
  const std::size_t n = std::size_t{1} << ell;
  const double* pyr = pyramid.data();
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::size_t b = 0; b < n; ++b) {
    double best = std::abs(pyr[0]);
    for (int k = 1; k <= ell; ++k) {
      const std::size_t prefix = b & ((std::size_t{1} << k) - 1);
      best = std::max(best, std::abs(pyr[pyramid_offset(k) + prefix]));
    }
    out[b] = best;
  }
}

void square_from_pyramid(std::span<const double> pyramid, int ell,
                         std::span<double> out) {
  const std::size_t n = std::size_t{1} << ell;
  const double* pyr = pyramid.data();
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::size_t b = 0; b < n; ++b) {
    double prev = pyr[0];
    double acc = prev * prev;
    for (int k = 1; k <= ell; ++k) {
      const std::size_t prefix = b & ((std::size_t{1} << k) - 1);
      const double cur = pyr[pyramid_offset(k) + prefix];
      const double diff = cur - prev;
      acc += diff * diff;
      prev = cur;
    }
    out[b] = std::sqrt(acc);
  }
}

double sum_abs_pow(std::span<const double> v, double p) {
  const std::size_t n = v.size();
  const std::size_t chunks = (n + kReductionChunk - 1) / kReductionChunk;
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = c * kReductionChunk;
    const std::size_t end = std::min(n, begin + kReductionChunk);
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += abs_pow(v[i], p);
    partial[c] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

SignSearchResult max_sign_sum(std::span<const double> a, int m, int n) {
  const int free_bits = n - 1;
  const int low_bits = std::min(free_bits, 12);
  const std::uint64_t block_len = std::uint64_t{1} << low_bits;
  const std::uint64_t blocks = std::uint64_t{1} << (free_bits - low_bits);
  std::vector<SignSearchResult> block_best(blocks);

#pragma omp parallel for schedule(dynamic) if (blocks > 1)
  for (std::uint64_t c = 0; c < blocks; ++c) {
    const std::uint64_t base = c << low_bits;
    std::vector<double> rows(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      double row = 0.0;
      for (int l = 0; l < n; ++l) {
        const double entry = a[static_cast<std::size_t>(j) * n + l];
        row += ((base >> l) & 1U) ? -entry : entry;
      }
      rows[j] = row;
    }
    std::uint64_t w = base;
    double total = 0.0;
    for (double r : rows) total += std::abs(r);
    SignSearchResult best{total, w};

    for (std::uint64_t i = 1; i < block_len; ++i) {
      const int flip = std::countr_zero(i);
      const bool was_negative = (w >> flip) & 1U;
      w ^= std::uint64_t{1} << flip;
      total = 0.0;
      for (int j = 0; j < m; ++j) {
        const double entry = a[static_cast<std::size_t>(j) * n + flip];
        rows[j] += was_negative ? 2.0 * entry : -2.0 * entry;
        total += std::abs(rows[j]);
      }
      if (total > best.value) best = {total, w};
    }
    best.value = evaluate_signs(a, m, n, best.w_bits);
    block_best[c] = best;
  }

  SignSearchResult result{-1.0, 0};
  for (const auto& b : block_best) {
    if (b.value > result.value) result = b;
  }
  return result;
}

}  // namespace cubelab::kernels::omp
