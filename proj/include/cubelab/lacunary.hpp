#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cubelab {

inline constexpr int kMaxLacunaryDegree = 20;

// f(z) = sum_{j=0}^{m} c_j z^(2^j) on the unit circle.
class LacunaryPolynomial {
 public:
  explicit LacunaryPolynomial(std::vector<std::complex<double>> coeffs);

  int m() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const std::complex<double>> coeffs() const noexcept { return coeffs_; }

 private:
  std::vector<std::complex<double>> coeffs_;
};

// (sum |c_j|^2)^(1/2).
double l2_norm(const LacunaryPolynomial& f);

// (2 (sum |c_j|^2)^2 - sum |c_j|^4)^(1/4): only the diagonal pairings of
// frequencies survive in the expansion of |f|^4.
double l4_norm_closed(const LacunaryPolynomial& f);

struct CollisionReport {
  bool holds = true;
  std::size_t tuples_checked = 0;
  // (j1, j2, l1, l2) with 2^j1 + 2^j2 = 2^l1 + 2^l2 but {j1,j2} != {l1,l2}.
  std::optional<std::array<int, 4>> counterexample;
};

// Exhaustive check over [0, max_j]^4 that sums of two powers of two
// coincide only for equal multisets of exponents. max_j <= 20.
CollisionReport collision_check(int max_j);

// True when 2^j1 + 2^j2 == 2^l1 + 2^l2.
bool same_frequency(int j1, int j2, int l1, int l2) noexcept;

// Smallest power of two exceeding p * 2^m + 1.
std::size_t default_circle_points(const LacunaryPolynomial& f, int p);

// ((1/M) sum_{k<M} |f(e^{2 pi i k / M})|^p)^(1/p) for even p >= 2. Exact for
// M > (p/2)(2^m - 1), the top frequency of |f|^p; smaller M is rejected.
// `points` = 0 selects default_circle_points.
double circle_quadrature_norm(const LacunaryPolynomial& f, int p, std::size_t points = 0);

}  // namespace cubelab
