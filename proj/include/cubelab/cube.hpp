#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace cubelab {

inline constexpr int kMaxEll = 24;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// A real-valued function on the Boolean cube {-1,+1}^ell under the uniform
// probability measure.
//
// Point encoding: entry b of values() holds f(x(b)) where coordinate
// x_j(b) = +1 if bit (j-1) of b is 0 and -1 if it is 1 (j is 1-based).
// Every module in this library uses the same convention.
//
// Immutable after construction; copies are cheap enough at desk scale and
// sharing read-only across threads is safe.
class CubeFunction {
 public:
  // Throws InvalidArgument unless 1 <= ell <= kMaxEll, values.size() == 2^ell
  // and every entry is finite.
  CubeFunction(int ell, std::vector<double> values);

  static CubeFunction constant(int ell, double c);
  static CubeFunction zero(int ell) { return constant(ell, 0.0); }

  int ell() const noexcept { return ell_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t point) const { return values_[point]; }

  friend bool operator==(const CubeFunction&, const CubeFunction&) = default;

 private:
  int ell_;
  std::vector<double> values_;
};

CubeFunction make_function(int ell, std::vector<double> values);

// x_j at the given point, j in [1, ell].
inline int coordinate(std::size_t point, int j) noexcept {
  return ((point >> (j - 1)) & 1U) ? -1 : 1;
}

inline std::size_t cube_size(int ell) noexcept { return std::size_t{1} << ell; }

// Normalized counting-measure norm (2^-ell sum |f|^p)^(1/p) for p >= 1, or
// max |f| for p = kInfinity. Rejects p < 1.
double lp_norm(const CubeFunction& f, double p);

// Same formula for any p > 0 (including 0 < p < 1, where it is not a norm).
double lp_quantity(const CubeFunction& f, double p);

double sup_norm(const CubeFunction& f);

// 2^-ell sum f(x) g(x). Throws on dimension mismatch.
double inner_product(const CubeFunction& f, const CubeFunction& g);

// Pointwise arithmetic. Binary forms require equal ell.
CubeFunction operator+(const CubeFunction& f, const CubeFunction& g);
CubeFunction operator-(const CubeFunction& f, const CubeFunction& g);
CubeFunction operator*(const CubeFunction& f, const CubeFunction& g);
CubeFunction operator*(double c, const CubeFunction& f);

// Largest pointwise |f - g|.
double max_abs_difference(const CubeFunction& f, const CubeFunction& g);

}  // namespace cubelab
