#include "cubelab/khintchine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "cubelab/cube.hpp"
#include "cubelab/error.hpp"
#include "cubelab/random.hpp"

namespace cubelab {
namespace {

void require_coefficients(std::span<const double> a, int max_ell) {
  if (a.empty()) throw InvalidArgument("a", "coefficient vector is empty");
  if (a.size() > static_cast<std::size_t>(max_ell)) {
    throw InvalidArgument("a", "length " + std::to_string(a.size()) + " exceeds " +
                                   std::to_string(max_ell));
  }
  for (double x : a) {
    if (!std::isfinite(x)) throw InvalidArgument("a", "non-finite coefficient");
  }
}

// All (s_1..s_ell) with nonnegative parts summing to s, with their
// multinomial weights (2s)! / prod (2 s_j)!.
class CompositionTable {
 public:
  CompositionTable(int ell, int s) : ell_(ell) {
    std::vector<double> factorial(2 * s + 1, 1.0);
    for (int i = 1; i <= 2 * s; ++i) factorial[i] = factorial[i - 1] * i;

    struct Frame {
      int index;
      int remaining;
      int value;
    };
    std::vector<std::uint8_t> current(static_cast<std::size_t>(ell), 0);
    std::vector<Frame> stack{{0, s, -1}};
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.index == ell - 1) {
        current[top.index] = static_cast<std::uint8_t>(top.remaining);
        double denom = 1.0;
        for (std::uint8_t part : current) denom *= factorial[2 * part];
        parts_.insert(parts_.end(), current.begin(), current.end());
        weights_.push_back(factorial[2 * s] / denom);
        stack.pop_back();
        continue;
      }
      if (++top.value > top.remaining) {
        stack.pop_back();
        continue;
      }
      current[top.index] = static_cast<std::uint8_t>(top.value);
      stack.push_back({top.index + 1, top.remaining - top.value, -1});
    }
  }

  std::size_t count() const noexcept { return weights_.size(); }
  std::span<const std::uint8_t> parts(std::size_t i) const {
    return std::span<const std::uint8_t>(parts_).subspan(i * ell_, ell_);
  }
  double weight(std::size_t i) const { return weights_[i]; }

 private:
  std::size_t ell_;
  std::vector<std::uint8_t> parts_;
  std::vector<double> weights_;
};

// Table of a_j^(2t) for t = 0..s.
std::vector<double> even_powers(std::span<const double> a, int s) {
  std::vector<double> pw(a.size() * (s + 1));
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double sq = a[j] * a[j];
    double acc = 1.0;
    for (int t = 0; t <= s; ++t) {
      pw[j * (s + 1) + t] = acc;
      acc *= sq;
    }
  }
  return pw;
}

double moment_with_gradient(const CompositionTable& table, std::span<const double> a, int s,
                            std::span<double> grad) {
  const std::size_t ell = a.size();
  const auto pw = even_powers(a, s);
  std::vector<double> prefix(ell + 1), suffix(ell + 1);
  if (!grad.empty()) std::fill(grad.begin(), grad.end(), 0.0);
  double total = 0.0;
  for (std::size_t c = 0; c < table.count(); ++c) {
    const auto parts = table.parts(c);
    prefix[0] = 1.0;
    for (std::size_t j = 0; j < ell; ++j) prefix[j + 1] = prefix[j] * pw[j * (s + 1) + parts[j]];
    total += table.weight(c) * prefix[ell];
    if (grad.empty()) continue;
    suffix[ell] = 1.0;
    for (std::size_t j = ell; j-- > 0;) suffix[j] = suffix[j + 1] * pw[j * (s + 1) + parts[j]];
    for (std::size_t j = 0; j < ell; ++j) {
      if (parts[j] == 0) continue;
      const double odd_power = pw[j * (s + 1) + parts[j] - 1] * a[j];
      grad[j] += table.weight(c) * 2.0 * parts[j] * odd_power * prefix[j] * suffix[j + 1];
    }
  }
  return total;
}

// f = sum_j a_j r_j on B_ell, into `values` (2^ell entries).
void span_values(std::span<const double> a, std::vector<double>& values) {
  const int ell = static_cast<int>(a.size());
  values.assign(cube_size(ell), 0.0);
  values[0] = a[0];
  values[1] = -a[0];
  for (int k = 1; k < ell; ++k) {
    const std::size_t width = std::size_t{1} << k;
    for (std::size_t b = 0; b < width; ++b) {
      values[b + width] = values[b] - a[k];
      values[b] += a[k];
    }
  }
}

// E|f|^p and its gradient in a. Points with f = 0 contribute zero to the
// gradient (a subgradient when p <= 1).
double cube_moment_with_gradient(std::span<const double> a, double p, std::span<double> grad) {
  std::vector<double> values;
  span_values(a, values);
  const double scale = 1.0 / static_cast<double>(values.size());
  double total = 0.0;
  for (double& x : values) {
    const double ax = std::abs(x);
    const double powered = std::pow(ax, p);
    total += powered;
    // Reuse storage for the pointwise derivative p |f|^(p-1) sgn f.
    x = ax > 0.0 ? std::copysign(p * powered / ax, x) : 0.0;
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    double g = 0.0;
    for (std::size_t b = 0; b < values.size(); ++b) {
      g += ((b >> j) & 1U) ? -values[b] : values[b];
    }
    grad[j] = g * scale;
  }
  return total * scale;
}

std::vector<std::vector<double>> structured_starts(int ell) {
  std::vector<std::vector<double>> starts;
  starts.emplace_back(ell, 1.0);  // all equal
  if (ell >= 2) {
    std::vector<double> spike(ell, 0.0);
    spike[0] = 1.0;
    starts.push_back(spike);
    spike[1] = 1.0;
    starts.push_back(spike);
  }
  return starts;
}

struct MultiStart {
  SphereSearchResult best;
  int best_index = 0;
  int starts = 0;
};

// Runs the search from the structured starts followed by `restarts` random
// ones (random start r uses stream r of the seed). Ties keep the earlier start.
MultiStart search_all_starts(int ell, const SphereObjective& objective,
                             const KhintchineOptions& options) {
  if (options.restarts < 0) throw InvalidArgument("restarts", "must be nonnegative");
  auto starts = structured_starts(ell);
  for (int r = 0; r < options.restarts; ++r) {
    Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(r));
    starts.push_back(random_unit_vector(static_cast<std::size_t>(ell), rng));
  }

  std::vector<SphereSearchResult> results(starts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < starts.size(); ++i) {
    results[i] = maximize_on_sphere(objective, starts[i], options.search);
  }

  MultiStart out{results[0], 0, static_cast<int>(starts.size())};
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value > out.best.value) {
      out.best = results[i];
      out.best_index = static_cast<int>(i);
    }
  }
  return out;
}

double l2(std::span<const double> a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

void require_ell(int ell, int max_ell) {
  if (ell < 1 || ell > max_ell) {
    throw InvalidArgument("ell", "must lie in [1, " + std::to_string(max_ell) + "]");
  }
}

std::string label(const std::string& what, int ell) {
  return what + "; empirical at ell = " + std::to_string(ell);
}

}  // namespace

double even_moment(std::span<const double> a, int s) {
  require_coefficients(a, kMaxMomentEll);
  if (s < 1 || s > kMaxMomentOrder) {
    throw InvalidArgument("s", "moment order must lie in [1, " +
                                   std::to_string(kMaxMomentOrder) + "]");
  }
  const CompositionTable table(static_cast<int>(a.size()), s);
  return moment_with_gradient(table, a, s, {});
}

double cube_moment(std::span<const double> a, double p) {
  require_coefficients(a, kMaxEnumerationEll);
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidArgument("p", "must be positive and finite");
  std::vector<double> values;
  span_values(a, values);
  double total = 0.0;
  for (double x : values) total += std::pow(std::abs(x), p);
  return total / static_cast<double>(values.size());
}

KhintchineResult best_ratio_even(int ell, int s, const KhintchineOptions& options) {
  require_ell(ell, kMaxMomentEll);
  if (s < 2 || s > kMaxMomentOrder) {
    throw InvalidArgument("s", "must lie in [2, " + std::to_string(kMaxMomentOrder) + "]");
  }
  const CompositionTable table(ell, s);
  const SphereObjective objective = [&table, s](std::span<const double> a, std::span<double> grad) {
    return moment_with_gradient(table, a, s, grad);
  };
  const MultiStart run = search_all_starts(ell, objective, options);

  KhintchineResult out;
  out.ell = ell;
  out.exponent = 2.0 * s;
  out.argvector = run.best.point;
  out.ratio = std::pow(even_moment(out.argvector, s), 1.0 / (2.0 * s)) / l2(out.argvector);
  out.method = label("multinomial even moment, projected gradient ascent on the coefficient sphere", ell);
  out.starts = run.starts;
  out.best_start = run.best_index;
  return out;
}

KhintchineResult best_ratio_high(int ell, double p, const KhintchineOptions& options) {
  require_ell(ell, kMaxEnumerationEll);
  if (!(p > 2.0) || !std::isfinite(p)) throw InvalidArgument("p", "must be finite and > 2");
  const SphereObjective objective = [p](std::span<const double> a, std::span<double> grad) {
    return cube_moment_with_gradient(a, p, grad);
  };
  const MultiStart run = search_all_starts(ell, objective, options);

  KhintchineResult out;
  out.ell = ell;
  out.exponent = p;
  out.argvector = run.best.point;
  out.ratio = std::pow(cube_moment(out.argvector, p), 1.0 / p) / l2(out.argvector);
  out.method = label("cube enumeration, projected gradient ascent on the coefficient sphere", ell);
  out.starts = run.starts;
  out.best_start = run.best_index;
  return out;
}

KhintchineResult best_ratio_low(int ell, double q, const KhintchineOptions& options) {
  require_ell(ell, kMaxEnumerationEll);
  if (!(q > 0.0 && q < 2.0)) throw InvalidArgument("q", "must lie in (0, 2)");
  const SphereObjective objective = [q](std::span<const double> a, std::span<double> grad) {
    const double value = cube_moment_with_gradient(a, q, grad);
    for (double& g : grad) g = -g;
    return -value;
  };
  const MultiStart run = search_all_starts(ell, objective, options);

  KhintchineResult out;
  out.ell = ell;
  out.exponent = q;
  out.argvector = run.best.point;
  out.ratio = std::pow(cube_moment(out.argvector, q), 1.0 / q) / l2(out.argvector);
  out.method = label("cube enumeration, projected gradient descent on the coefficient sphere", ell);
  out.starts = run.starts;
  out.best_start = run.best_index;
  return out;
}

double holder_reverse_constant(double q) {
  if (!(q > 0.0 && q < 2.0)) throw InvalidArgument("q", "must lie in (0, 2)");
  const double theta = 2.0 / (4.0 - q);
  return std::pow(3.0, (1.0 - theta) / (q * theta));
}

}  // namespace cubelab
