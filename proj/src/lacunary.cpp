#include "cubelab/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cubelab/error.hpp"

namespace cubelab {
namespace {

// Kahan-Babuska (Neumaier) running sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

constexpr std::size_t kChunk = 1024;

}  // namespace

LacunaryPolynomial::LacunaryPolynomial(std::vector<std::complex<double>> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidArgument("coeffs", "need at least one coefficient");
  if (coeffs_.size() > kMaxLacunaryDegree + 1) {
    throw InvalidArgument("coeffs", "at most " + std::to_string(kMaxLacunaryDegree + 1) +
                                        " coefficients (frequency 2^" +
                                        std::to_string(kMaxLacunaryDegree) + ")");
  }
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!std::isfinite(coeffs_[j].real()) || !std::isfinite(coeffs_[j].imag())) {
      throw InvalidArgument("coeffs", "entry " + std::to_string(j) + " is not finite");
    }
  }
}

double l2_norm(const LacunaryPolynomial& f) {
  double s = 0.0;
  for (const auto& c : f.coeffs()) s += std::norm(c);
  return std::sqrt(s);
}

double l4_norm_closed(const LacunaryPolynomial& f) {
  double s2 = 0.0, s4 = 0.0;
  for (const auto& c : f.coeffs()) {
    const double a = std::norm(c);
    s2 += a;
    s4 += a * a;
  }
  return std::pow(2.0 * s2 * s2 - s4, 0.25);
}

bool same_frequency(int j1, int j2, int l1, int l2) noexcept {
  const auto pw = [](int e) { return std::uint64_t{1} << e; };
  return pw(j1) + pw(j2) == pw(l1) + pw(l2);
}

CollisionReport collision_check(int max_j) {
  if (max_j < 0 || max_j > kMaxLacunaryDegree) {
    throw InvalidArgument("max_j", "must lie in [0, " + std::to_string(kMaxLacunaryDegree) + "]");
  }
  CollisionReport report;
  for (int j1 = 0; j1 <= max_j; ++j1) {
    for (int j2 = 0; j2 <= max_j; ++j2) {
      for (int l1 = 0; l1 <= max_j; ++l1) {
        for (int l2 = 0; l2 <= max_j; ++l2) {
          ++report.tuples_checked;
          const bool same_multiset = (j1 == l1 && j2 == l2) || (j1 == l2 && j2 == l1);
          if (same_frequency(j1, j2, l1, l2) != same_multiset && report.holds) {
            report.holds = false;
            report.counterexample = std::array<int, 4>{j1, j2, l1, l2};
          }
        }
      }
    }
  }
  return report;
}

std::size_t default_circle_points(const LacunaryPolynomial& f, int p) {
  const std::size_t bound = static_cast<std::size_t>(p) * (std::size_t{1} << f.m()) + 1;
  std::size_t points = 1;
  while (points <= bound) points <<= 1;
  return points;
}

double circle_quadrature_norm(const LacunaryPolynomial& f, int p, std::size_t points) {
  if (p < 2 || p % 2 != 0) throw InvalidArgument("p", "must be an even integer >= 2");
  if (points == 0) points = default_circle_points(f, p);
  const std::size_t top_frequency = static_cast<std::size_t>(p / 2) * ((std::size_t{1} << f.m()) - 1);
  if (points <= top_frequency) {
    throw InvalidArgument("M", std::to_string(points) + " points cannot integrate frequency " +
                                   std::to_string(top_frequency) + " exactly");
  }

  std::vector<std::complex<double>> roots(points);
  for (std::size_t k = 0; k < points; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(points);
    roots[k] = {std::cos(angle), std::sin(angle)};
  }
  const auto coeffs = f.coeffs();
  const int half_p = p / 2;

  const std::size_t chunks = (points + kChunk - 1) / kChunk;
  std::vector<CompensatedSum> partial(chunks);
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t end = std::min(points, (c + 1) * kChunk);
    for (std::size_t k = c * kChunk; k < end; ++k) {
      std::complex<double> value = 0.0;
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        // z^(2^j) at z = e^{2 pi i k / M} is the root at index k 2^j mod M.
        const std::size_t index = (k << j) % points;
        value += coeffs[j] * roots[index];
      }
      const double modulus_sq = std::norm(value);
      double powered = 1.0;
      for (int t = 0; t < half_p; ++t) powered *= modulus_sq;
      partial[c].add(powered);
    }
  }
  CompensatedSum total;
  for (const auto& s : partial) {
    total.add(s.value());
  }
  return std::pow(total.value() / static_cast<double>(points), 1.0 / p);
}

}  // namespace cubelab
