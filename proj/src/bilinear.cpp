#include "cubelab/bilinear.hpp"

#include <algorithm>
#include <string>

#include "cubelab/error.hpp"
#include "cubelab/kernels.hpp"
#include "cubelab/random.hpp"
#include "cubelab/sphere_search.hpp"

namespace cubelab {
namespace {

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

void require_nonzero(const RealMatrix& a) {
  if (a.is_zero()) throw InvalidArgument("rows", "matrix is zero");
}

void check_configuration(const RealMatrix& a, GramConfiguration& config) {
  if (config.dim < 1) throw InvalidArgument("dim", "must be positive");
  if (config.v.size() != static_cast<std::size_t>(a.rows()) ||
      config.w.size() != static_cast<std::size_t>(a.cols())) {
    throw InvalidArgument("start", "vector counts do not match the matrix shape");
  }
  const auto fix = [&](std::vector<double>& u) {
    if (u.size() != static_cast<std::size_t>(config.dim)) {
      throw InvalidArgument("start", "vector length differs from dim");
    }
    if (normalize(u) == 0.0) throw InvalidArgument("start", "zero starting vector");
  };
  for (auto& u : config.v) fix(u);
  for (auto& u : config.w) fix(u);
}

void require_monotone(double before, double after) {
  if (after < before - 1e-10 * std::max(1.0, std::abs(before))) {
    throw InternalCheckFailed("alternating maximization decreased the objective from " +
                              std::to_string(before) + " to " + std::to_string(after));
  }
}

GramConfiguration random_configuration(int m, int n, int dim, Rng& rng) {
  GramConfiguration c;
  c.dim = dim;
  for (int j = 0; j < m; ++j) c.v.push_back(random_unit_vector(dim, rng));
  for (int l = 0; l < n; ++l) c.w.push_back(random_unit_vector(dim, rng));
  return c;
}

GramConfiguration sign_configuration(const SignNorm& s, int dim) {
  GramConfiguration c;
  c.dim = dim;
  for (int x : s.v_star) {
    std::vector<double> u(dim, 0.0);
    u[0] = x;
    c.v.push_back(std::move(u));
  }
  for (int x : s.w_star) {
    std::vector<double> u(dim, 0.0);
    u[0] = x;
    c.w.push_back(std::move(u));
  }
  return c;
}

}  // namespace

RealMatrix::RealMatrix(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows < 1 || cols < 1) throw InvalidArgument("rows", "matrix must be at least 1 x 1");
  if (data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw InvalidArgument("rows", "entry count does not match " + std::to_string(rows) + " x " +
                                      std::to_string(cols));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw InvalidArgument("rows", "entry (" + std::to_string(i / cols) + ", " +
                                        std::to_string(i % cols) + ") is not finite");
    }
  }
}

RealMatrix RealMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidArgument("rows", "matrix is empty");
  const std::size_t cols = rows.front().size();
  std::vector<double> data;
  data.reserve(rows.size() * cols);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != cols) {
      throw InvalidArgument("rows", "row " + std::to_string(j) + " has " +
                                        std::to_string(rows[j].size()) + " entries, expected " +
                                        std::to_string(cols));
    }
    data.insert(data.end(), rows[j].begin(), rows[j].end());
  }
  return RealMatrix(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(data));
}

RealMatrix RealMatrix::transpose() const {
  std::vector<double> out(data_.size());
  for (int j = 0; j < rows_; ++j) {
    for (int l = 0; l < cols_; ++l) out[static_cast<std::size_t>(l) * rows_ + j] = (*this)(j, l);
  }
  return RealMatrix(cols_, rows_, std::move(out));
}

RealMatrix RealMatrix::scaled(double c) const {
  std::vector<double> out(data_);
  for (double& x : out) x *= c;
  return RealMatrix(rows_, cols_, std::move(out));
}

bool RealMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return x == 0.0; });
}

double sign_bilinear(const RealMatrix& a, std::span<const int> v, std::span<const int> w) {
  double total = 0.0;
  for (int j = 0; j < a.rows(); ++j) {
    double row = 0.0;
    for (int l = 0; l < a.cols(); ++l) row += a(j, l) * w[l];
    total += v[j] * row;
  }
  return total;
}

SignNorm infty_to_one_norm(const RealMatrix& a) {
  if (a.cols() > kMaxExactSignDimension) {
    throw InvalidArgument("rows", "exact enumeration needs n <= " +
                                      std::to_string(kMaxExactSignDimension) + ", got " +
                                      std::to_string(a.cols()));
  }
  const auto best = kernels::omp::max_sign_sum(a.data(), a.rows(), a.cols());
  SignNorm out;
  out.w_star.resize(a.cols());
  for (int l = 0; l < a.cols(); ++l) out.w_star[l] = ((best.w_bits >> l) & 1U) ? -1 : 1;
  out.v_star.resize(a.rows());
  for (int j = 0; j < a.rows(); ++j) {
    double row = 0.0;
    for (int l = 0; l < a.cols(); ++l) row += a(j, l) * out.w_star[l];
    out.v_star[j] = row < 0.0 ? -1 : 1;
  }
  out.norm = best.value;
  return out;
}

RealMatrix restricted(const RealMatrix& a) {
  require_nonzero(a);
  return a.scaled(1.0 / infty_to_one_norm(a).norm);
}

double trace_pairing(const RealMatrix& a, const RealMatrix& t) {
  if (t.rows() != a.cols() || t.cols() != a.rows()) {
    throw InvalidArgument("T", "expected " + std::to_string(a.cols()) + " x " +
                                   std::to_string(a.rows()) + ", got " + std::to_string(t.rows()) +
                                   " x " + std::to_string(t.cols()));
  }
  double total = 0.0;
  for (int j = 0; j < a.rows(); ++j) {
    for (int l = 0; l < a.cols(); ++l) total += a(j, l) * t(l, j);
  }
  return total;
}

TraceDuality trace_duality(const RealMatrix& a) {
  std::vector<double> signs(a.data().size());
  double sum_abs = 0.0;
  for (int j = 0; j < a.rows(); ++j) {
    for (int l = 0; l < a.cols(); ++l) {
      const double x = a(j, l);
      sum_abs += std::abs(x);
      signs[static_cast<std::size_t>(l) * a.rows() + j] = x > 0.0 ? 1.0 : x < 0.0 ? -1.0 : 0.0;
    }
  }
  RealMatrix witness(a.cols(), a.rows(), std::move(signs));
  const double pairing = trace_pairing(a, witness);
  return {sum_abs, std::move(witness), pairing};
}

double bilinear_objective(const RealMatrix& a, const GramConfiguration& config) {
  double total = 0.0;
  for (int j = 0; j < a.rows(); ++j) {
    for (int l = 0; l < a.cols(); ++l) total += a(j, l) * dot(config.v[j], config.w[l]);
  }
  return total;
}

GramConfiguration alternating_maximize(const RealMatrix& a, GramConfiguration config,
                                       const AlternatingOptions& options,
                                       AlternatingTrace* trace) {
  check_configuration(a, config);
  const int m = a.rows();
  const int n = a.cols();
  const std::size_t dim = static_cast<std::size_t>(config.dim);
  std::vector<double> acc(dim);

  double current = bilinear_objective(a, config);
  AlternatingTrace local;
  while (local.iterations < options.max_iterations) {
    const double before = current;

    for (int j = 0; j < m; ++j) {
      std::fill(acc.begin(), acc.end(), 0.0);
      for (int l = 0; l < n; ++l) {
        const double c = a(j, l);
        for (std::size_t i = 0; i < dim; ++i) acc[i] += c * config.w[l][i];
      }
      if (normalize(acc) > 0.0) config.v[j] = acc;
    }
    const double half = bilinear_objective(a, config);
    require_monotone(current, half);

    for (int l = 0; l < n; ++l) {
      std::fill(acc.begin(), acc.end(), 0.0);
      for (int j = 0; j < m; ++j) {
        const double c = a(j, l);
        for (std::size_t i = 0; i < dim; ++i) acc[i] += c * config.v[j][i];
      }
      if (normalize(acc) > 0.0) config.w[l] = acc;
    }
    current = bilinear_objective(a, config);
    require_monotone(half, current);

    ++local.iterations;
    if (std::abs(current - before) <= options.tol * std::max(std::abs(current), 1e-300)) {
      local.converged = true;
      break;
    }
  }
  config.objective = current;
  if (trace != nullptr) *trace = local;
  return config;
}

GrothendieckResult grothendieck_ratio(const RealMatrix& a, const GrothendieckOptions& options) {
  require_nonzero(a);
  if (options.restarts < 1) throw InvalidArgument("restarts", "must be positive");
  if (!(options.tol > 0.0)) throw InvalidArgument("tol", "must be positive");
  if (options.dim < 0) throw InvalidArgument("dim", "must be positive");
  const int dim = options.dim > 0 ? options.dim : a.rows() + a.cols();

  GrothendieckResult result;
  std::vector<GramConfiguration> starts;
  if (a.cols() <= kMaxExactSignDimension) {
    const SignNorm scalar = infty_to_one_norm(a);
    result.scalar_norm = scalar.norm;
    result.runs.push_back({"sign", options.seed, 0.0, 0, false});
    starts.push_back(sign_configuration(scalar, dim));
  } else {
    result.scalar_exact = false;
    result.scalar_norm = sign_norm_heuristic(a, options.restarts, options.seed);
  }
  for (int r = 0; r < options.restarts; ++r) {
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(r);
    Rng rng = make_rng(seed);
    starts.push_back(random_configuration(a.rows(), a.cols(), dim, rng));
    result.runs.push_back({"random", seed, 0.0, 0, false});
  }

  const AlternatingOptions alt{options.tol, options.max_iterations};
  std::vector<GramConfiguration> finals(starts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < starts.size(); ++i) {
    AlternatingTrace t;
    finals[i] = alternating_maximize(a, std::move(starts[i]), alt, &t);
    result.runs[i].objective = finals[i].objective;
    result.runs[i].iterations = t.iterations;
    result.runs[i].converged = t.converged;
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < finals.size(); ++i) {
    if (finals[i].objective > finals[best].objective) best = i;
  }
  result.best = std::move(finals[best]);
  result.ratio = result.best.objective / result.scalar_norm;
  return result;
}

double sign_norm_heuristic(const RealMatrix& a, int restarts, std::uint64_t seed) {
  require_nonzero(a);
  double best = 0.0;
  for (int r = 0; r < std::max(restarts, 1); ++r) {
    Rng rng = make_rng(seed + static_cast<std::uint64_t>(r));
    std::bernoulli_distribution coin;
    GramConfiguration c;
    c.dim = 1;
    for (int j = 0; j < a.rows(); ++j) c.v.push_back({1.0});
    for (int l = 0; l < a.cols(); ++l) c.w.push_back({coin(rng) ? -1.0 : 1.0});
    best = std::max(best, alternating_maximize(a, std::move(c)).objective);
  }
  return best;
}

}  // namespace cubelab
