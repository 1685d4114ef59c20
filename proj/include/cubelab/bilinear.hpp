#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace cubelab {

inline constexpr int kMaxExactSignDimension = 25;

// (exp(pi/2) - exp(-pi/2)) / 2, the Grothendieck bound used as the ceiling
// for every observed vector-to-scalar ratio.
inline const double kGrothendieckBound =
    (std::exp(std::numbers::pi / 2) - std::exp(-std::numbers::pi / 2)) / 2;

// Dense row-major m x n matrix with finite entries.
class RealMatrix {
 public:
  RealMatrix(int rows, int cols, std::vector<double> data);
  static RealMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  double operator()(int j, int l) const { return data_[static_cast<std::size_t>(j) * cols_ + l]; }
  std::span<const double> data() const noexcept { return data_; }

  RealMatrix transpose() const;
  RealMatrix scaled(double c) const;
  bool is_zero() const noexcept;

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

struct SignNorm {
  double norm = 0.0;
  std::vector<int> w_star;  // length n, entries +/-1, last entry +1
  std::vector<int> v_star;  // length m, sign of (A w*)_j (+1 on zero rows)
};

// max over v in {+/-1}^m, w in {+/-1}^n of sum_{j,l} a_{j,l} v_j w_l, by
// enumerating w (the optimal v is the sign of each row sum). n <= 25.
SignNorm infty_to_one_norm(const RealMatrix& a);

// Scalar bilinear value sum_j v_j (A w)_j for given sign vectors.
double sign_bilinear(const RealMatrix& a, std::span<const int> v, std::span<const int> w);

// A / infty_to_one_norm(A), so the bilinear form is bounded by 1 on the
// cubes with the bound attained. Rejects the zero matrix.
RealMatrix restricted(const RealMatrix& a);

// sum_{j,l} a_{j,l} t_{l,j} = trace(T A) for A m x n, T n x m.
double trace_pairing(const RealMatrix& a, const RealMatrix& t);

struct TraceDuality {
  double sum_abs = 0.0;         // sum |a_{j,l}|
  RealMatrix witness;           // sign(A)^T, entries in {-1, 0, 1}
  double witness_pairing = 0.0; // equals sum_abs
};

TraceDuality trace_duality(const RealMatrix& a);

// Unit vectors v_1..v_m, w_1..w_n in R^dim and sum a_{j,l} <v_j, w_l>.
struct GramConfiguration {
  int dim = 0;
  std::vector<std::vector<double>> v;
  std::vector<std::vector<double>> w;
  double objective = 0.0;
};

double bilinear_objective(const RealMatrix& a, const GramConfiguration& config);

struct AlternatingOptions {
  double tol = 1e-12;          // stop when relative objective change < tol
  int max_iterations = 100000; // full (v then w) sweeps
};

struct AlternatingTrace {
  int iterations = 0;
  bool converged = false;
};

// Block coordinate ascent: v_j <- normalize(sum_l a_{j,l} w_l), then
// w_l <- normalize(sum_j a_{j,l} v_j). A zero sum leaves that vector as it
// was. The objective never decreases; a drop beyond 1e-10 throws
// InternalCheckFailed.
GramConfiguration alternating_maximize(const RealMatrix& a, GramConfiguration start,
                                       const AlternatingOptions& options = {},
                                       AlternatingTrace* trace = nullptr);

struct GrothendieckOptions {
  int dim = 0;  // 0 means rows + cols
  int restarts = 16;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  int max_iterations = 100000;
};

struct RestartRecord {
  std::string kind;  // "sign" for the embedded scalar optimum, else "random"
  std::uint64_t seed = 0;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct GrothendieckResult {
  GramConfiguration best;
  double scalar_norm = 0.0;
  bool scalar_exact = true;  // false when n > 25 and the heuristic was used
  double ratio = 0.0;        // best.objective / scalar_norm
  std::vector<RestartRecord> runs;
};

// Best configuration over `restarts` random starts (restart r seeded with
// seed + r, vectors uniform on the sphere) plus one start at the scalar
// optimum embedded along e_1. The objective is a lower bound on the vector
// supremum, so `ratio` is a lower bound on the constant for this matrix.
GrothendieckResult grothendieck_ratio(const RealMatrix& a, const GrothendieckOptions& options = {});

// Alternating ascent restricted to dim = 1 from `restarts` random sign
// starts; a lower bound on infty_to_one_norm for any n.
double sign_norm_heuristic(const RealMatrix& a, int restarts, std::uint64_t seed);

}  // namespace cubelab
