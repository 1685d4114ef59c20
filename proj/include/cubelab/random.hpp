#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "cubelab/cube.hpp"

namespace cubelab {

using Rng = std::mt19937_64;

// Generator for task `stream` under `seed`. Distinct (seed, stream) pairs give
// unrelated sequences; the same pair always gives the same sequence.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

enum class Ensemble {
  kGaussian,  // independent standard normal value per point
  kSign,      // independent fair +/-1 per point
  kSparse,    // a few normal spikes on an otherwise zero function
};

std::string_view ensemble_name(Ensemble e);

CubeFunction random_function(int ell, Ensemble ensemble, Rng& rng);

std::vector<double> gaussian_vector(std::size_t n, Rng& rng);

// Uniform on the unit sphere in R^d (normalized Gaussian sample).
std::vector<double> random_unit_vector(std::size_t d, Rng& rng);

}  // namespace cubelab
