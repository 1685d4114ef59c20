#include "cubelab/random.hpp"

#include <algorithm>

#include "cubelab/sphere_search.hpp"

namespace cubelab {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x6375u};
  return Rng(seq);
}

std::string_view ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::kGaussian: return "gaussian";
    case Ensemble::kSign: return "sign";
    case Ensemble::kSparse: return "sparse";
  }
  return "unknown";
}

CubeFunction random_function(int ell, Ensemble ensemble, Rng& rng) {
  const std::size_t n = cube_size(ell);
  std::vector<double> values(n, 0.0);
  std::normal_distribution<double> normal;
  switch (ensemble) {
    case Ensemble::kGaussian:
      for (double& x : values) x = normal(rng);
      break;
    case Ensemble::kSign: {
      std::bernoulli_distribution coin;
      for (double& x : values) x = coin(rng) ? 1.0 : -1.0;
      break;
    }
    case Ensemble::kSparse: {
      std::uniform_int_distribution<std::size_t> where(0, n - 1);
      std::uniform_int_distribution<int> how_many(1, 4);
      const int spikes = how_many(rng);
      for (int i = 0; i < spikes; ++i) values[where(rng)] = normal(rng);
      break;
    }
  }
  return CubeFunction(ell, std::move(values));
}

std::vector<double> gaussian_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> v(n);
  for (double& x : v) x = normal(rng);
  return v;
}

std::vector<double> random_unit_vector(std::size_t d, Rng& rng) {
  std::vector<double> v;
  do {
    v = gaussian_vector(d, rng);
  } while (normalize(v) == 0.0);
  return v;
}

}  // namespace cubelab
