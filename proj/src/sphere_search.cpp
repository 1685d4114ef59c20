#include "cubelab/sphere_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cubelab/error.hpp"

namespace cubelab {

double normalize(std::span<double> v) {
  const double len = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  if (len > 0.0) {
    for (double& x : v) x /= len;
  }
  return len;
}

SphereSearchResult maximize_on_sphere(const SphereObjective& objective,
                                      std::vector<double> start,
                                      const SphereSearchOptions& options) {
  if (normalize(start) == 0.0) throw InvalidArgument("start", "zero vector");
  const std::size_t d = start.size();

  SphereSearchResult state{std::move(start), 0.0, 0};
  std::vector<double> grad(d), tangent(d), candidate(d), cand_grad(d);
  state.value = objective(state.point, grad);

  double step = options.initial_step;
  while (state.iterations < options.max_iterations) {
    const double radial = std::inner_product(grad.begin(), grad.end(), state.point.begin(), 0.0);
    for (std::size_t i = 0; i < d; ++i) tangent[i] = grad[i] - radial * state.point[i];
    if (normalize(tangent) < 1e-300) break;

    bool accepted = false;
    double cand_value = state.value;
    while (step >= 1e-16) {
      for (std::size_t i = 0; i < d; ++i) candidate[i] = state.point[i] + step * tangent[i];
      normalize(candidate);
      cand_value = objective(candidate, cand_grad);
      if (cand_value > state.value) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    ++state.iterations;
    const double gain = cand_value - state.value;
    state.point.swap(candidate);
    grad.swap(cand_grad);
    state.value = cand_value;
    if (gain <= options.rel_tol * std::abs(cand_value)) break;
    step = std::min(2.0 * step, 1.0);
  }
  return state;
}

}  // namespace cubelab
