#pragma once

#include <functional>
#include <span>
#include <vector>

namespace cubelab {

// Objective evaluated on a unit vector; writes the Euclidean gradient into
// `grad` (same length) and returns the value.
using SphereObjective = std::function<double(std::span<const double> point, std::span<double> grad)>;

struct SphereSearchOptions {
  double rel_tol = 1e-12;   // stop once an accepted step improves by less
  int max_iterations = 10000;
  double initial_step = 0.25;
};

struct SphereSearchResult {
  std::vector<double> point;
  double value = 0.0;
  int iterations = 0;
};

// Projected gradient ascent on the unit sphere with step halving: a step is
// accepted only if it strictly improves the objective, otherwise the step is
// halved until it does or falls below 1e-16. `start` need not be normalized
// but must be nonzero.
SphereSearchResult maximize_on_sphere(const SphereObjective& objective,
                                      std::vector<double> start,
                                      const SphereSearchOptions& options = {});

// Normalizes in place; returns the original length.
double normalize(std::span<double> v);

}  // namespace cubelab
