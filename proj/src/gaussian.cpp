#include "cubelab/gaussian.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cubelab/error.hpp"
#include "cubelab/quadrature.hpp"

namespace cubelab {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kTruncation = 6.0;

void require_exponent(double p, bool allow_zero) {
  if (!std::isfinite(p) || p < 0.0 || (!allow_zero && p == 0.0)) {
    throw InvalidArgument("p", allow_zero ? "must be finite and >= 0" : "must be finite and > 0");
  }
}

double vector_length(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidArgument("v", "non-finite entry");
    s += x * x;
  }
  return std::sqrt(s);
}

// Panels of 16 nodes per axis; 0 picks a size that keeps n = 3 affordable.
int default_panels(int n, int requested) {
  if (requested > 0) return requested;
  return n == 1 ? 48 : n == 2 ? 24 : 12;
}

}  // namespace

double gamma_function(double x) {
  using std::numbers::pi;
  if (x < 0.5) return pi / (std::sin(pi * x) * gamma_function(1.0 - x));
  x -= 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (x + static_cast<double>(i));
  const double t = x + kLanczosG + 0.5;
  // t^(x+1/2) split in two halves to delay overflow.
  const double half_power = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * pi) * half_power * (half_power * std::exp(-t)) * series;
}

GaussianMoment gaussian_moment(double p) {
  require_exponent(p, true);
  const double a = 0.5 * (p + 1.0);
  GaussianMoment m;
  m.p = p;
  m.value = std::pow(std::numbers::pi, -a) * gamma_function(a);
  m.root = p > 0.0 ? std::pow(m.value, 1.0 / p) : 1.0;
  return m;
}

double gaussian_moment_quadrature(double p) {
  require_exponent(p, true);
  const auto integrand = [p](double x) {
    const double weight = std::exp(-std::numbers::pi * x * x);
    return p == 0.0 ? weight : std::pow(x, p) * weight;
  };
  return 2.0 * integrate_adaptive(integrand, 0.0, kTruncation, 1e-14);
}

double linear_functional_moment(std::span<const double> v, double p) {
  if (v.empty()) throw InvalidArgument("v", "vector is empty");
  require_exponent(p, false);
  const double len = vector_length(v);
  return len * gaussian_moment(p).root;
}

double linear_functional_moment_quadrature(std::span<const double> v, double p,
                                           int panels_per_axis) {
  if (v.empty() || v.size() > 3) throw InvalidArgument("v", "quadrature supports 1 <= n <= 3");
  require_exponent(p, false);
  vector_length(v);
  const auto rule = composite_gauss_legendre(-kTruncation, kTruncation,
                                             default_panels(static_cast<int>(v.size()), panels_per_axis), 16);
  const std::size_t q = rule.nodes.size();
  std::vector<double> weight(q);
  for (std::size_t i = 0; i < q; ++i) {
    weight[i] = rule.weights[i] * std::exp(-std::numbers::pi * rule.nodes[i] * rule.nodes[i]);
  }
  const std::size_t n = v.size();
  double total = 0.0;
  if (n == 1) {
    for (std::size_t i = 0; i < q; ++i) total += weight[i] * std::pow(std::abs(rule.nodes[i] * v[0]), p);
  } else if (n == 2) {
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::size_t i = 0; i < q; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < q; ++j) {
        const double h = rule.nodes[i] * v[0] + rule.nodes[j] * v[1];
        row += weight[j] * std::pow(std::abs(h), p);
      }
      total += weight[i] * row;
    }
  } else {
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::size_t i = 0; i < q; ++i) {
      double plane = 0.0;
      for (std::size_t j = 0; j < q; ++j) {
        double row = 0.0;
        for (std::size_t k = 0; k < q; ++k) {
          const double h = rule.nodes[i] * v[0] + rule.nodes[j] * v[1] + rule.nodes[k] * v[2];
          row += weight[k] * std::pow(std::abs(h), p);
        }
        plane += weight[j] * row;
      }
      total += weight[i] * plane;
    }
  }
  return std::pow(total, 1.0 / p);
}

double gaussian_mass_quadrature(int n, int panels_per_axis) {
  if (n < 1 || n > 3) throw InvalidArgument("n", "quadrature supports 1 <= n <= 3");
  const auto rule = composite_gauss_legendre(-kTruncation, kTruncation,
                                             default_panels(n, panels_per_axis), 16);
  const std::size_t q = rule.nodes.size();
  const std::size_t outer = n >= 2 ? q : 1;
  const std::size_t middle = n >= 3 ? q : 1;
  double total = 0.0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::size_t i = 0; i < outer; ++i) {
    for (std::size_t j = 0; j < middle; ++j) {
      for (std::size_t k = 0; k < q; ++k) {
        double r2 = rule.nodes[k] * rule.nodes[k];
        double w = rule.weights[k];
        if (n >= 2) {
          r2 += rule.nodes[i] * rule.nodes[i];
          w *= rule.weights[i];
        }
        if (n >= 3) {
          r2 += rule.nodes[j] * rule.nodes[j];
          w *= rule.weights[j];
        }
        total += w * std::exp(-std::numbers::pi * r2);
      }
    }
  }
  return total;
}

double gaussian_khintchine_limit(double p) {
  if (!std::isfinite(p) || p < 1.0) throw InvalidArgument("p", "must be finite and >= 1");
  return gaussian_moment(p).root / gaussian_moment(2.0).root;
}

}  // namespace cubelab
