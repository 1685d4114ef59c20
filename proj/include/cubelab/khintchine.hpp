#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubelab/sphere_search.hpp"

namespace cubelab {

inline constexpr int kMaxMomentEll = 16;
inline constexpr int kMaxMomentOrder = 6;
inline constexpr int kMaxEnumerationEll = 20;

// E[(sum_j a_j r_j)^(2s)] from the multinomial expansion: only terms with
// every exponent even survive, giving
//   sum over s_1 + ... + s_ell = s of (2s)! / prod (2 s_j)! * prod a_j^(2 s_j).
// Requires 1 <= s <= 6 and 1 <= ell <= 16.
double even_moment(std::span<const double> a, int s);

// 2^-ell sum_x |sum_j a_j x_j|^p by enumerating the cube (any p > 0).
double cube_moment(std::span<const double> a, double p);

struct KhintchineOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  SphereSearchOptions search{};
};

// An extremal ratio ||f||_p / ||f||_2 over the Rademacher span at fixed ell,
// as found by multi-start search. Always a one-sided estimate of the true
// extremum at this ell; never the universal constant.
struct KhintchineResult {
  int ell = 0;
  double exponent = 0.0;
  double ratio = 0.0;
  std::vector<double> argvector;  // unit coefficient vector attaining `ratio`
  std::string method;
  int starts = 0;       // structured + random
  int best_start = 0;   // index into the start list
};

// sup_a (E f^(2s))^(1/(2s)) / ||f||_2 for s >= 2.
KhintchineResult best_ratio_even(int ell, int s, const KhintchineOptions& options = {});

// sup_a ||f||_p / ||f||_2 for real p > 2 by cube enumeration (ell <= 20).
KhintchineResult best_ratio_high(int ell, double p, const KhintchineOptions& options = {});

// inf_a ||f||_q / ||f||_2 for 0 < q < 2 by cube enumeration (ell <= 20).
// The reciprocal is the empirical reverse constant at this ell.
KhintchineResult best_ratio_low(int ell, double q, const KhintchineOptions& options = {});

// 3^((1-t)/(q t)) with t = 2/(4-q): the constant in ||f||_2 <= C ||f||_q that
// follows from Holder interpolation between q and 4 plus ||f||_4 <= 3^(1/4) ||f||_2.
double holder_reverse_constant(double q);

}  // namespace cubelab
