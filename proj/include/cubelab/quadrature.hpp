#pragma once

#include <functional>
#include <vector>

namespace cubelab {

// n-point Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

// Composite rule on [a, b]: `panels` equal panels with `order` nodes each.
GaussLegendreRule composite_gauss_legendre(double a, double b, int panels, int order);

// Adaptive bisection with a 20-point Gauss-Legendre rule per panel. A panel is
// accepted when its two halves agree with the whole to `rel_tol` (relative to
// the running estimate) or the depth limit is reached.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-13, int max_depth = 60);

}  // namespace cubelab
