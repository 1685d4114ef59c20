#include "cubelab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cubelab/error.hpp"

namespace cubelab {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("n", "rule needs at least one node");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton on P_n from the Tricomi initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

GaussLegendreRule composite_gauss_legendre(double a, double b, int panels, int order) {
  if (panels < 1) throw InvalidArgument("panels", "must be positive");
  const GaussLegendreRule base = gauss_legendre(order);
  GaussLegendreRule out;
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    for (int i = 0; i < order; ++i) {
      out.nodes.push_back(mid + 0.5 * width * base.nodes[i]);
      out.weights.push_back(0.5 * width * base.weights[i]);
    }
  }
  return out;
}

namespace {

double apply_rule(const GaussLegendreRule& rule, const std::function<double(double)>& f,
                  double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

double adapt(const GaussLegendreRule& rule, const std::function<double(double)>& f, double a,
             double b, double whole, double abs_tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = apply_rule(rule, f, a, mid);
  const double right = apply_rule(rule, f, mid, b);
  if (depth <= 0 || std::abs(left + right - whole) <= abs_tol) return left + right;
  return adapt(rule, f, a, mid, left, 0.5 * abs_tol, depth - 1) +
         adapt(rule, f, mid, b, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_depth) {
  static const GaussLegendreRule rule = gauss_legendre(20);
  const double whole = apply_rule(rule, f, a, b);
  const double abs_tol = rel_tol * std::max(std::abs(whole), 1e-300);
  return adapt(rule, f, a, b, whole, abs_tol, max_depth);
}

}  // namespace cubelab
