#include <algorithm>
#include <cmath>

#include "cubelab/kernels.hpp"

namespace cubelab::kernels::serial {

void fwht(std::span<double> data) {
  const std::size_t n = data.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double u = data[j];
        const double v = data[j + h];
        data[j] = u + v;
        data[j + h] = u - v;
      }
    }
  }
}

void expectation_pyramid(std::span<const double> values, int ell,
                         std::span<double> pyramid) {
  std::copy(values.begin(), values.end(),
            pyramid.begin() + static_cast<std::ptrdiff_t>(pyramid_offset(ell)));
  for (int k = ell - 1; k >= 0; --k) {
    const std::size_t width = std::size_t{1} << k;
    const double* finer = pyramid.data() + pyramid_offset(k + 1);
    double* coarser = pyramid.data() + pyramid_offset(k);
    for (std::size_t p = 0; p < width; ++p) {
      coarser[p] = 0.5 * (finer[p] + finer[p + width]);
    }
  }
}

void maximal_from_pyramid(std::span<const double> pyramid, int ell,
                          std::span<double> out) {
  const std::size_t n = std::size_t{1} << ell;
  for (std::size_t b = 0; b < n; ++b) {
    double best = 0.0;
    for (int k = 0; k <= ell; ++k) {
      const std::size_t prefix = b & ((std::size_t{1} << k) - 1);
      best = std::max(best, std::abs(pyramid[pyramid_offset(k) + prefix]));
    }
    out[b] = best;
  }
}

void square_from_pyramid(std::span<const double> pyramid, int ell,
                         std::span<double> out) {
  const std::size_t n = std::size_t{1} << ell;
  for (std::size_t b = 0; b < n; ++b) {
    double prev = pyramid[0];
    double acc = prev * prev;
    for (int k = 1; k <= ell; ++k) {
      const std::size_t prefix = b & ((std::size_t{1} << k) - 1);
      const double cur = pyramid[pyramid_offset(k) + prefix];
      acc += (cur - prev) * (cur - prev);
      prev = cur;
    }
    out[b] = std::sqrt(acc);
  }
}

double sum_abs_pow(std::span<const double> v, double p) {
  double sum = 0.0;
  for (double x : v) sum += std::pow(std::abs(x), p);
  return sum;
}

SignSearchResult max_sign_sum(std::span<const double> a, int m, int n) {
  SignSearchResult best{-1.0, 0};
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t w = 0; w < count; ++w) {
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      double row = 0.0;
      for (int l = 0; l < n; ++l) {
        const double sign = ((w >> l) & 1U) ? -1.0 : 1.0;
        row += a[static_cast<std::size_t>(j) * n + l] * sign;
      }
      total += std::abs(row);
    }
    if (total > best.value) best = {total, w};
  }
  return best;
}

}  // namespace cubelab::kernels::serial
