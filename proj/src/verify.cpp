#include "cubelab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "cubelab/bilinear.hpp"
#include "cubelab/cube.hpp"
#include "cubelab/gaussian.hpp"
#include "cubelab/khintchine.hpp"
#include "cubelab/lacunary.hpp"
#include "cubelab/martingale.hpp"
#include "cubelab/random.hpp"
#include "cubelab/walsh.hpp"

namespace cubelab::verify {
namespace {

Ensemble ensemble_for(std::size_t task) { return static_cast<Ensemble>(task % 3); }

double relative_gap(double x, double y) {
  return std::abs(x - y) / std::max(1.0, std::max(std::abs(x), std::abs(y)));
}

std::string describe(std::initializer_list<std::pair<const char*, double>> items) {
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& [k, v] : items) {
    if (!first) os << ", ";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

CheckResult make(std::string id, std::string name, bool passed, std::string detail,
                 std::vector<Metric> metrics) {
  return {std::move(id), std::move(name), passed, std::move(detail), std::move(metrics)};
}

// Point set of a block as a bitmask (ell <= 6).
std::uint64_t block_points(const DyadicBlock& b, int ell) {
  std::uint64_t mask = 0;
  for (std::size_t x = 0; x < cube_size(ell); ++x) {
    if (b.contains(x)) mask |= std::uint64_t{1} << x;
  }
  return mask;
}

std::vector<DyadicBlock> all_blocks(int ell) {
  std::vector<DyadicBlock> out;
  for (int k = 0; k <= ell; ++k) {
    for (std::uint32_t p = 0; p < (std::uint32_t{1} << k); ++p) out.push_back({k, p});
  }
  return out;
}

// Structural checks of cz_blocks against superlevel_set for one (f, lambda).
// Returns the number of failed conditions.
int audit_cz(const CubeFunction& f, double lambda) {
  int failures = 0;
  const auto blocks = cz_blocks(f, lambda);
  const auto level_set = superlevel_set(f, lambda);
  const ExpectationPyramid pyramid(f);
  const int ell = f.ell();

  std::vector<int> cover(f.size(), 0);
  for (const auto& b : blocks) {
    if (!(std::abs(pyramid.level(b.level)[b.prefix]) > lambda)) ++failures;
    // Every strict ancestor stays at or below lambda.
    for (int k = 0; k < b.level; ++k) {
      const std::uint32_t anc = b.prefix & ((std::uint32_t{1} << k) - 1);
      if (std::abs(pyramid.level(k)[anc]) > lambda) ++failures;
    }
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (b.contains(x)) ++cover[x];
    }
  }
  std::vector<std::size_t> union_points;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (cover[x] > 1) ++failures;  // overlap
    if (cover[x] == 1) union_points.push_back(x);
  }
  if (union_points != level_set.members) ++failures;

  if (ell <= 6) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto pi = block_points(blocks[i], ell);
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        const auto pj = block_points(blocks[j], ell);
        const bool inside = (pi & ~pj) == 0;
        const bool contains = (pj & ~pi) == 0;
        const bool disjoint = (pi & pj) == 0;
        if (!(inside || contains || disjoint)) ++failures;
        if (!disjoint) ++failures;  // distinct maximal blocks never meet
      }
    }
  }
  return failures;
}

}  // namespace

CheckResult walsh_orthonormality_parseval(std::uint64_t seed) {
  double worst_orth = 0.0;
  std::size_t pairs = 0;
  for (int ell = 1; ell <= 8; ++ell) {
    std::vector<CubeFunction> basis;
    for (SubsetMask i = 0; i < cube_size(ell); ++i) basis.push_back(walsh_function(ell, i));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i; j < basis.size(); ++j) {
        const double expect = i == j ? 1.0 : 0.0;
        worst_orth = std::max(worst_orth, std::abs(inner_product(basis[i], basis[j]) - expect));
        ++pairs;
      }
    }
  }

  constexpr std::size_t kSamples = 1000;
  double worst_parseval = 0.0;
  for (std::size_t t = 0; t < kSamples; ++t) {
    Rng rng = make_rng(seed, t);
    const int ell = 1 + static_cast<int>(t % 12);
    const CubeFunction f = random_function(ell, ensemble_for(t), rng);
    const WalshSpectrum s = analyze(f);
    double energy = 0.0;
    for (double c : s.coeffs()) energy += c * c;
    const double norm_sq = inner_product(f, f);
    worst_parseval = std::max(worst_parseval, relative_gap(energy, norm_sq));

    std::uniform_int_distribution<SubsetMask> pick(0, static_cast<SubsetMask>(cube_size(ell) - 1));
    const SubsetMask i = pick(rng), j = pick(rng);
    const double expect = i == j ? 1.0 : 0.0;
    worst_orth = std::max(worst_orth, std::abs(inner_product(walsh_function(ell, i),
                                                             walsh_function(ell, j)) - expect));
  }
  const bool ok = worst_orth <= 1e-10 && worst_parseval <= 1e-10;
  return make("A1", "Walsh orthonormality and Parseval", ok,
              describe({{"exhaustive_pairs", double(pairs)},
                        {"max_orthonormality_error", worst_orth},
                        {"max_parseval_rel_error", worst_parseval}}),
              {{"max_orthonormality_error", worst_orth}, {"max_parseval_rel_error", worst_parseval}});
}

CheckResult square_function_identity(std::uint64_t seed) {
  constexpr std::size_t kSamples = 10000;
  std::vector<double> gaps(kSamples);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t t = 0; t < kSamples; ++t) {
    Rng rng = make_rng(seed, t);
    const int ell = 1 + static_cast<int>(t % 12);
    const CubeFunction f = random_function(ell, ensemble_for(t), rng);
    gaps[t] = relative_gap(lp_norm(square_function(f), 2.0), lp_norm(f, 2.0));
  }
  const double worst_l2 = *std::max_element(gaps.begin(), gaps.end());

  constexpr std::size_t kSpans = 1000;
  double worst_const = 0.0;
  for (std::size_t t = 0; t < kSpans; ++t) {
    Rng rng = make_rng(seed ^ 0x5eedULL, t);
    const auto a = gaussian_vector(1 + t % 12, rng);
    double len = 0.0;
    for (double x : a) len += x * x;
    len = std::sqrt(len);
    const CubeFunction s = square_function(rademacher_span(a));
    for (double v : s.values()) {
      worst_const = std::max(worst_const, std::abs(v - len) / std::max(1.0, len));
    }
  }
  const bool ok = worst_l2 <= 1e-10 && worst_const <= 1e-12;
  return make("A2", "Square-function L2 identity", ok,
              describe({{"max_l2_rel_gap", worst_l2}, {"max_rademacher_deviation", worst_const}}),
              {{"max_l2_rel_gap", worst_l2}, {"max_rademacher_deviation", worst_const}});
}

CheckResult weak_type_bounds(std::uint64_t seed) {
  // lambda |A_lambda| <= ||f||_1 and lambda |A_{2 lambda}| <= ||f'||_1.
  std::size_t cases = 0, violations = 0;
  double worst_ratio = 0.0, worst_trunc_ratio = 0.0;
  const auto audit = [&](const CubeFunction& f, double lambda) {
    const double l1 = lp_norm(f, 1.0);
    const double lhs = lambda * superlevel_set(f, lambda).measure;
    const double trunc_l1 = lp_norm(truncate_above(f, lambda), 1.0);
    const double lhs2 = lambda * superlevel_set(f, 2.0 * lambda).measure;
    ++cases;
    if (lhs > l1 + 1e-12 * std::max(1.0, l1)) ++violations;
    if (lhs2 > trunc_l1 + 1e-12 * std::max(1.0, trunc_l1)) ++violations;
    if (l1 > 0.0) worst_ratio = std::max(worst_ratio, lhs / l1);
    if (trunc_l1 > 0.0) worst_trunc_ratio = std::max(worst_trunc_ratio, lhs2 / trunc_l1);
  };

  const double grid[] = {0.0625, 0.125, 0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75, 0.9, 1.0};
  for (int ell = 1; ell <= 4; ++ell) {
    const std::size_t n = cube_size(ell);
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << n); ++pattern) {
      std::vector<double> values(n);
      for (std::size_t b = 0; b < n; ++b) values[b] = ((pattern >> b) & 1U) ? -1.0 : 1.0;
      const CubeFunction f(ell, std::move(values));
      for (double lambda : grid) audit(f, lambda);
    }
  }
  const std::size_t exhaustive_cases = cases;

  for (std::size_t t = 0; t < 10000; ++t) {
    Rng rng = make_rng(seed, t);
    const int ell = 1 + static_cast<int>(t % 12);
    const CubeFunction f = random_function(ell, ensemble_for(t), rng);
    std::uniform_real_distribution<double> u(std::log(0.01), std::log(1.5));
    const double lambda = std::max(sup_norm(f), 1e-3) * std::exp(u(rng));
    audit(f, lambda);
  }
  return make("A3", "Weak-type (1,1) and truncation bound", violations == 0,
              describe({{"cases", double(cases)},
                        {"exhaustive_cases", double(exhaustive_cases)},
                        {"violations", double(violations)},
                        {"max_lambda_measure_over_l1", worst_ratio},
                        {"max_truncated_ratio", worst_trunc_ratio}}),
              {{"violations", double(violations)},
               {"max_lambda_measure_over_l1", worst_ratio},
               {"max_truncated_ratio", worst_trunc_ratio}});
}

CheckResult cz_decomposition(std::uint64_t seed) {
  std::size_t failures = 0, audits = 0, block_pairs = 0;

  // Trichotomy and relate() against brute-force point sets, all blocks.
  for (int ell = 1; ell <= 6; ++ell) {
    const auto blocks = all_blocks(ell);
    std::vector<std::uint64_t> points;
    for (const auto& b : blocks) points.push_back(block_points(b, ell));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        ++block_pairs;
        const bool inside = (points[i] & ~points[j]) == 0;
        const bool contains = (points[j] & ~points[i]) == 0;
        const bool disjoint = (points[i] & points[j]) == 0;
        if (!(inside || contains || disjoint)) ++failures;
        BlockRelation expected = disjoint ? BlockRelation::kDisjoint
                                 : inside && contains ? BlockRelation::kEqual
                                 : inside             ? BlockRelation::kInside
                                                      : BlockRelation::kContains;
        if (relate(blocks[i], blocks[j]) != expected) ++failures;
      }
    }
  }

  const double grid[] = {0.125, 0.25, 0.5, 0.75};
  for (int ell = 1; ell <= 4; ++ell) {
    const std::size_t n = cube_size(ell);
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << n); ++pattern) {
      std::vector<double> values(n);
      for (std::size_t b = 0; b < n; ++b) values[b] = ((pattern >> b) & 1U) ? -1.0 : 1.0;
      const CubeFunction f(ell, std::move(values));
      for (double lambda : grid) {
        failures += audit_cz(f, lambda);
        ++audits;
      }
    }
  }
  for (std::size_t t = 0; t < 4000; ++t) {
    Rng rng = make_rng(seed, t);
    const int ell = 5 + static_cast<int>(t % 2);
    const CubeFunction f = random_function(ell, ensemble_for(t), rng);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    failures += audit_cz(f, std::max(sup_norm(f), 1e-3) * u(rng));
    ++audits;
  }
  return make("A4", "Calderon-Zygmund blocks", failures == 0,
              describe({{"block_pairs", double(block_pairs)},
                        {"decompositions", double(audits)},
                        {"failures", double(failures)}}),
              {{"failures", double(failures)}, {"decompositions", double(audits)}});
}

CheckResult khintchine_fourth_moment(std::uint64_t seed) {
  std::size_t violations = 0;
  double worst = 0.0;
  for (std::size_t t = 0; t < 100000; ++t) {
    Rng rng = make_rng(seed, t);
    const auto a = gaussian_vector(1 + t % kMaxMomentEll, rng);
    double sq = 0.0;
    for (double x : a) sq += x * x;
    const double bound = 3.0 * sq * sq;
    const double m4 = even_moment(a, 2);
    if (m4 > bound * (1.0 + 1e-12)) ++violations;
    worst = std::max(worst, m4 / bound);
  }

  const double gauss = gaussian_khintchine_limit(4.0);
  const double gauss_gap = std::abs(gauss - std::pow(3.0, 0.25));
  double worst_closed = 0.0;
  bool dominated = true;
  KhintchineOptions options;
  options.seed = seed;
  for (int ell = 2; ell <= 12; ++ell) {
    const auto r = best_ratio_even(ell, 2, options);
    worst_closed = std::max(worst_closed, std::abs(std::pow(r.ratio, 4.0) - (3.0 - 2.0 / ell)));
    if (r.ratio > gauss) dominated = false;
  }
  const bool ok = violations == 0 && worst_closed <= 1e-6 && gauss_gap <= 1e-12 && dominated;
  return make("A5", "Khintchine p = 4", ok,
              describe({{"violations", double(violations)},
                        {"max_m4_over_bound", worst},
                        {"max_closed_form_gap", worst_closed},
                        {"gaussian_limit", gauss}}),
              {{"violations", double(violations)},
               {"max_closed_form_gap", worst_closed},
               {"gaussian_limit", gauss}});
}

CheckResult reverse_khintchine(std::uint64_t seed) {
  const double holder = holder_reverse_constant(1.0);
  KhintchineOptions options;
  options.seed = seed;
  double worst = 0.0;
  for (int ell = 1; ell <= 12; ++ell) {
    worst = std::max(worst, 1.0 / best_ratio_low(ell, 1.0, options).ratio);
  }
  const bool ok = worst <= holder + 1e-9 && std::abs(holder - std::sqrt(3.0)) <= 1e-12;
  return make("A6", "Reverse Khintchine (q = 1)", ok,
              describe({{"max_empirical_reciprocal", worst}, {"holder_constant", holder}}),
              {{"max_empirical_reciprocal", worst}, {"holder_constant", holder}});
}

CheckResult gaussian_moments() {
  double worst = 0.0;
  for (double p : {0.0, 1.0, 2.0, 3.0, 4.0, 6.0}) {
    const double closed = gaussian_moment(p).value;
    const double quad = gaussian_moment_quadrature(p);
    worst = std::max(worst, std::abs(closed - quad) / closed);
  }
  const double norm_gap = std::abs(gaussian_moment(0.0).value - 1.0);
  const bool ok = worst <= 1e-9 && norm_gap <= 1e-12;
  return make("A7", "Gaussian absolute moments", ok,
              describe({{"max_rel_error_vs_quadrature", worst}, {"normalization_gap", norm_gap}}),
              {{"max_rel_error_vs_quadrature", worst}, {"normalization_gap", norm_gap}});
}

CheckResult lacunary_norms(std::uint64_t seed) {
  const auto collisions = collision_check(10);
  double worst_l4 = 0.0, worst_l2 = 0.0, worst_ratio = 0.0;
  std::size_t violations = 0;
  const double ceiling = std::pow(2.0, 0.25);
  for (std::size_t t = 0; t < 1000; ++t) {
    Rng rng = make_rng(seed, t);
    const auto re = gaussian_vector(1 + t % 11, rng);
    const auto im = gaussian_vector(re.size(), rng);
    std::vector<std::complex<double>> c(re.size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = {re[j], im[j]};
    const LacunaryPolynomial f(std::move(c));
    const double l2 = l2_norm(f);
    const double l4 = l4_norm_closed(f);
    worst_l4 = std::max(worst_l4, std::abs(l4 - circle_quadrature_norm(f, 4)) / l4);
    worst_l2 = std::max(worst_l2, std::abs(l2 - circle_quadrature_norm(f, 2)) / l2);
    worst_ratio = std::max(worst_ratio, l4 / l2);
    if (l4 / l2 > ceiling) ++violations;
  }
  const bool ok = collisions.holds && worst_l4 <= 1e-9 && worst_l2 <= 1e-9 && violations == 0;
  return make("A8", "Lacunary L4 identity", ok,
              describe({{"collision_tuples", double(collisions.tuples_checked)},
                        {"max_l4_rel_error", worst_l4},
                        {"max_l2_rel_error", worst_l2},
                        {"max_l4_over_l2", worst_ratio},
                        {"violations", double(violations)}}),
              {{"max_l4_rel_error", worst_l4},
               {"max_l4_over_l2", worst_ratio},
               {"violations", double(violations)}});
}

CheckResult matrix_norms(std::uint64_t seed) {
  double worst_witness = 0.0;
  std::size_t bound_violations = 0, nonneg_mismatches = 0;
  for (std::size_t t = 0; t < 1000; ++t) {
    Rng rng = make_rng(seed, t);
    std::uniform_int_distribution<int> dim(1, 6);
    const int m = dim(rng), n = dim(rng);
    const RealMatrix a(m, n, gaussian_vector(static_cast<std::size_t>(m) * n, rng));
    const TraceDuality td = trace_duality(a);
    worst_witness = std::max(worst_witness, relative_gap(td.witness_pairing, td.sum_abs));

    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> tv(static_cast<std::size_t>(m) * n);
    for (double& x : tv) x = u(rng);
    double tmax = 0.0;
    for (double x : tv) tmax = std::max(tmax, std::abs(x));
    for (double& x : tv) x /= tmax;
    const RealMatrix tm(n, m, std::move(tv));
    if (std::abs(trace_pairing(a, tm)) > td.sum_abs * (1.0 + 1e-12)) ++bound_violations;

    std::uniform_real_distribution<double> pos(0.0, 1.0);
    std::uniform_int_distribution<int> dim2(1, 8);
    const int m2 = dim2(rng), n2 = dim2(rng);
    std::vector<double> entries(static_cast<std::size_t>(m2) * n2);
    for (double& x : entries) x = pos(rng);
    const RealMatrix b(m2, n2, entries);
    double total = 0.0;
    for (int j = 0; j < m2; ++j) {
      double row = 0.0;
      for (int l = 0; l < n2; ++l) row += b(j, l);
      total += row;
    }
    if (infty_to_one_norm(b).norm != total) ++nonneg_mismatches;
  }
  const bool ok = worst_witness <= 1e-12 && bound_violations == 0 && nonneg_mismatches == 0;
  return make("A9", "Trace duality and nonnegative norms", ok,
              describe({{"max_witness_gap", worst_witness},
                        {"bound_violations", double(bound_violations)},
                        {"nonnegative_mismatches", double(nonneg_mismatches)}}),
              {{"max_witness_gap", worst_witness},
               {"bound_violations", double(bound_violations)},
               {"nonnegative_mismatches", double(nonneg_mismatches)}});
}

CheckResult grothendieck_sweep(std::uint64_t seed) {
  const RealMatrix chsh = restricted(RealMatrix::from_rows({{1.0, 1.0}, {1.0, -1.0}}));
  GrothendieckOptions chsh_opts;
  chsh_opts.dim = 2;
  chsh_opts.restarts = 16;
  chsh_opts.tol = 1e-12;
  chsh_opts.seed = seed;
  const auto chsh_run = grothendieck_ratio(chsh, chsh_opts);
  const double chsh_gap = std::abs(chsh_run.best.objective - std::numbers::sqrt2);

  constexpr std::size_t kMatrices = 1000;
  std::vector<double> ratios(kMatrices);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t t = 0; t < kMatrices; ++t) {
    Rng rng = make_rng(seed, t);
    std::uniform_int_distribution<int> dim(1, 6);
    const int m = dim(rng), n = dim(rng);
    auto entries = gaussian_vector(static_cast<std::size_t>(m) * n, rng);
    const RealMatrix a = restricted(RealMatrix(m, n, std::move(entries)));
    GrothendieckOptions opts;
    opts.restarts = 8;
    opts.tol = 1e-10;
    opts.seed = seed + 1000 * t;
    opts.max_iterations = 20000;
    ratios[t] = grothendieck_ratio(a, opts).ratio;
  }
  const double max_ratio = *std::max_element(ratios.begin(), ratios.end());
  const double min_ratio = *std::min_element(ratios.begin(), ratios.end());
  const bool ok = chsh_gap <= 1e-6 &&
                  max_ratio <= kGrothendieckBound + 1e-9 && min_ratio >= 1.0 - 1e-9;
  return make("A10", "Grothendieck ratios", ok,
              describe({{"chsh_objective", chsh_run.best.objective},
                        {"chsh_gap", chsh_gap},
                        {"max_ratio", max_ratio},
                        {"min_ratio", min_ratio},
                        {"bound", kGrothendieckBound}}),
              {{"chsh_objective", chsh_run.best.objective},
               {"max_ratio", max_ratio},
               {"min_ratio", min_ratio}});
}

std::vector<EmpiricalRow> empirical_table(std::uint64_t seed, int max_ell, int samples_per_ell) {
  std::vector<EmpiricalRow> rows;
  for (int ell = 1; ell <= max_ell; ++ell) {
    const std::size_t count = static_cast<std::size_t>(samples_per_ell);
    std::vector<std::array<double, 5>> local(count);
#pragma omp parallel for schedule(dynamic, 32)
    for (std::size_t t = 0; t < count; ++t) {
      Rng rng = make_rng(seed + static_cast<std::uint64_t>(ell) * 0x9e3779b97f4a7c15ULL, t);
      const CubeFunction f = random_function(ell, ensemble_for(t), rng);
      const CubeFunction mf = maximal_function(f);
      const CubeFunction sf = square_function(f);
      std::array<double, 5> r{};
      const double ps[] = {1.5, 2.0, 3.0, 4.0};
      for (int i = 0; i < 4; ++i) {
        const double denom = lp_norm(f, ps[i]);
        r[i] = denom > 0.0 ? lp_norm(mf, ps[i]) / denom : 0.0;
      }
      const double f4 = lp_norm(f, 4.0);
      r[4] = f4 > 0.0 ? lp_norm(sf, 4.0) / f4 : 0.0;
      local[t] = r;
    }
    EmpiricalRow row;
    row.ell = ell;
    row.samples = samples_per_ell;
    for (const auto& r : local) {
      row.maximal_p1_5 = std::max(row.maximal_p1_5, r[0]);
      row.maximal_p2 = std::max(row.maximal_p2, r[1]);
      row.maximal_p3 = std::max(row.maximal_p3, r[2]);
      row.maximal_p4 = std::max(row.maximal_p4, r[3]);
      row.square_l4 = std::max(row.square_l4, r[4]);
    }
    rows.push_back(row);
  }
  return rows;
}

CheckResult empirical_constants(std::uint64_t seed, std::vector<EmpiricalRow>* rows_out) {
  auto rows = empirical_table(seed);
  bool finite = true;
  double sup_m15 = 0.0, sup_s4 = 0.0;
  for (const auto& r : rows) {
    for (double v : {r.maximal_p1_5, r.maximal_p2, r.maximal_p3, r.maximal_p4, r.square_l4}) {
      if (!std::isfinite(v)) finite = false;
    }
    sup_m15 = std::max(sup_m15, r.maximal_p1_5);
    sup_s4 = std::max(sup_s4, r.square_l4);
  }
  if (rows_out != nullptr) *rows_out = rows;
  return make("A11", "Empirical maximal/square constants (logged)", finite,
              describe({{"rows", double(rows.size())},
                        {"sup_maximal_p1.5", sup_m15},
                        {"sup_square_l4", sup_s4}}),
              {{"sup_maximal_p1.5", sup_m15}, {"sup_square_l4", sup_s4}});
}

std::vector<CheckResult> invariant_checks(std::uint64_t seed) {
  std::vector<CheckResult> out;

  {  // norm monotonicity in p, sup norm exactness
    std::size_t bad = 0;
    const double ps[] = {1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 8.0, kInfinity};
    for (std::size_t t = 0; t < 300; ++t) {
      Rng rng = make_rng(seed ^ 0x1001, t);
      const CubeFunction f = random_function(1 + t % 12, ensemble_for(t), rng);
      double prev = 0.0;
      for (double p : ps) {
        const double v = lp_norm(f, p);
        if (v < prev * (1.0 - 1e-12)) ++bad;
        prev = v;
      }
      double mx = 0.0;
      for (double x : f.values()) mx = std::max(mx, std::abs(x));
      if (sup_norm(f) != mx) ++bad;
    }
    out.push_back(make("I1", "Norm monotone in p", bad == 0,
                       describe({{"failures", double(bad)}}), {{"failures", double(bad)}}));
  }

  {  // E_k module property, projection chain, orthogonality, Pythagoras
    double worst_module = 0.0, worst_chain = 0.0, worst_orth = 0.0, worst_pyth = 0.0;
    for (std::size_t t = 0; t < 200; ++t) {
      Rng rng = make_rng(seed ^ 0x2002, t);
      const int ell = 1 + static_cast<int>(t % 10);
      const CubeFunction f = random_function(ell, Ensemble::kGaussian, rng);
      std::uniform_int_distribution<int> level(0, ell);
      const int k = level(rng), j = level(rng);
      const CubeFunction h = conditional_expectation(random_function(ell, Ensemble::kGaussian, rng), k);
      worst_module = std::max(worst_module, max_abs_difference(conditional_expectation(f * h, k),
                                                               h * conditional_expectation(f, k)));
      worst_chain = std::max(worst_chain,
                             max_abs_difference(conditional_expectation(conditional_expectation(f, k), j),
                                                conditional_expectation(f, std::min(j, k))));
      const auto diffs = martingale_differences(f);
      double energy = 0.0;
      for (std::size_t a = 0; a < diffs.size(); ++a) {
        energy += inner_product(diffs[a], diffs[a]);
        for (std::size_t b = a + 1; b < diffs.size(); ++b) {
          worst_orth = std::max(worst_orth, std::abs(inner_product(diffs[a], diffs[b])));
        }
      }
      worst_pyth = std::max(worst_pyth, relative_gap(energy, inner_product(f, f)));
    }
    const bool ok = worst_module <= 1e-12 && worst_chain <= 1e-12 && worst_orth <= 1e-12 &&
                    worst_pyth <= 1e-10;
    out.push_back(make("I2", "Conditional expectation algebra", ok,
                       describe({{"module", worst_module},
                                 {"chain", worst_chain},
                                 {"orthogonality", worst_orth},
                                 {"pythagoras", worst_pyth}}),
                       {{"module", worst_module}, {"chain", worst_chain},
                        {"orthogonality", worst_orth}, {"pythagoras", worst_pyth}}));
  }

  {  // even moments vs enumeration, symmetry, Gaussian domination
    double worst_enum = 0.0;
    std::size_t domination_failures = 0;
    for (std::size_t t = 0; t < 200; ++t) {
      Rng rng = make_rng(seed ^ 0x3003, t);
      auto a = gaussian_vector(1 + t % 12, rng);
      const int s = 1 + static_cast<int>(t % 4);
      const double closed = even_moment(a, s);
      worst_enum = std::max(worst_enum, std::abs(closed - cube_moment(a, 2.0 * s)) / closed);
      double sq = 0.0;
      for (double x : a) sq += x * x;
      double double_factorial = 1.0;
      for (int i = 1; i < 2 * s; i += 2) double_factorial *= i;
      if (closed > double_factorial * std::pow(sq, s) * (1.0 + 1e-12)) ++domination_failures;
      std::reverse(a.begin(), a.end());
      a[0] = -a[0];
      worst_enum = std::max(worst_enum, std::abs(closed - even_moment(a, s)) / closed);
    }
    const bool ok = worst_enum <= 1e-10 && domination_failures == 0;
    out.push_back(make("I3", "Even moments: enumeration, symmetry, Gaussian domination", ok,
                       describe({{"max_rel_error", worst_enum},
                                 {"domination_failures", double(domination_failures)}}),
                       {{"max_rel_error", worst_enum}}));
  }

  {  // Gaussian factorization and rotation invariance by quadrature
    double worst_mass = 0.0;
    for (int n = 1; n <= 3; ++n) worst_mass = std::max(worst_mass, std::abs(gaussian_mass_quadrature(n) - 1.0));
    const double e1[] = {1.0, 0.0};
    const double diag[] = {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
    const double rot = relative_gap(linear_functional_moment_quadrature(e1, 2.0),
                                    linear_functional_moment_quadrature(diag, 2.0));
    const double v34[] = {3.0, 4.0};
    const double reduce = std::abs(linear_functional_moment_quadrature(v34, 2.0) -
                                   linear_functional_moment(v34, 2.0)) /
                          linear_functional_moment(v34, 2.0);
    const bool ok = worst_mass <= 1e-6 && rot <= 1e-6 && reduce <= 1e-6;
    out.push_back(make("I4", "Gaussian factorization and rotation invariance", ok,
                       describe({{"mass_gap", worst_mass}, {"rotation_gap", rot}, {"reduction_gap", reduce}}),
                       {{"mass_gap", worst_mass}, {"rotation_gap", rot}, {"reduction_gap", reduce}}));
  }

  {  // lacunary identity, equal-coefficient ratio, rotation invariance
    double worst_identity = 0.0, worst_equal = 0.0, worst_rot = 0.0;
    for (int m = 0; m <= 10; ++m) {
      const LacunaryPolynomial eq(std::vector<std::complex<double>>(m + 1, {1.0, 0.0}));
      const double r = l4_norm_closed(eq) / l2_norm(eq);
      worst_equal = std::max(worst_equal, std::abs(std::pow(r, 4.0) - (2.0 - 1.0 / (m + 1))));
    }
    for (std::size_t t = 0; t < 200; ++t) {
      Rng rng = make_rng(seed ^ 0x4004, t);
      const auto re = gaussian_vector(1 + t % 11, rng);
      const auto im = gaussian_vector(re.size(), rng);
      std::vector<std::complex<double>> c(re.size()), rotated(re.size());
      const std::complex<double> phase = std::polar(1.0, 0.7 + 0.01 * static_cast<double>(t));
      double s4 = 0.0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        c[j] = {re[j], im[j]};
        rotated[j] = phase * c[j];
        s4 += std::norm(c[j]) * std::norm(c[j]);
      }
      const LacunaryPolynomial f(c), g(rotated);
      const double l2 = l2_norm(f), l4 = l4_norm_closed(f);
      worst_identity = std::max(worst_identity,
                                relative_gap(std::pow(l4, 4.0) + s4, 2.0 * std::pow(l2, 4.0)));
      worst_rot = std::max({worst_rot, relative_gap(l2, l2_norm(g)), relative_gap(l4, l4_norm_closed(g))});
    }
    const bool ok = worst_identity <= 1e-10 && worst_equal <= 1e-12 && worst_rot <= 1e-12;
    out.push_back(make("I5", "Lacunary identities", ok,
                       describe({{"identity", worst_identity}, {"equal_coeffs", worst_equal}, {"rotation", worst_rot}}),
                       {{"identity", worst_identity}, {"equal_coeffs", worst_equal}, {"rotation", worst_rot}}));
  }

  {  // scaling covariance, scalar <= vector, d = 1 exhaustive sign starts
    double worst_scale = 0.0, worst_d1 = 0.0;
    std::size_t order_failures = 0;
    for (std::size_t t = 0; t < 200; ++t) {
      Rng rng = make_rng(seed ^ 0x5005, t);
      std::uniform_int_distribution<int> dim(1, 4);
      const int m = dim(rng), n = dim(rng);
      const RealMatrix a(m, n, gaussian_vector(static_cast<std::size_t>(m) * n, rng));
      const double norm = infty_to_one_norm(a).norm;
      const double c = -2.5 + 0.01 * static_cast<double>(t);
      worst_scale = std::max(worst_scale,
                             relative_gap(infty_to_one_norm(a.scaled(c)).norm, std::abs(c) * norm));
      GrothendieckOptions opts;
      opts.restarts = 4;
      opts.seed = seed + t;
      if (norm > grothendieck_ratio(a, opts).best.objective + 1e-9) ++order_failures;

      double best_d1 = 0.0;
      for (std::uint32_t w = 0; w < (1U << n); ++w) {
        GramConfiguration start;
        start.dim = 1;
        start.v.assign(m, {1.0});
        for (int l = 0; l < n; ++l) start.w.push_back({((w >> l) & 1U) ? -1.0 : 1.0});
        best_d1 = std::max(best_d1, alternating_maximize(a, start).objective);
      }
      worst_d1 = std::max(worst_d1, relative_gap(best_d1, norm));
    }
    const bool ok = worst_scale <= 1e-12 && order_failures == 0 && worst_d1 <= 1e-12;
    out.push_back(make("I6", "Sign norm: scaling, scalar <= vector, d = 1 exactness", ok,
                       describe({{"scaling", worst_scale},
                                 {"order_failures", double(order_failures)},
                                 {"d1_gap", worst_d1}}),
                       {{"scaling", worst_scale}, {"d1_gap", worst_d1}}));
  }
  return out;
}

bool Report::all_passed() const {
  const auto ok = [](const CheckResult& c) { return c.passed; };
  return std::all_of(criteria.begin(), criteria.end(), ok) &&
         std::all_of(invariants.begin(), invariants.end(), ok);
}

Report verify_all(std::uint64_t seed) {
  Report report;
  report.seed = seed;
  report.criteria.push_back(walsh_orthonormality_parseval(seed));
  report.criteria.push_back(square_function_identity(seed));
  report.criteria.push_back(weak_type_bounds(seed));
  report.criteria.push_back(cz_decomposition(seed));
  report.criteria.push_back(khintchine_fourth_moment(seed));
  report.criteria.push_back(reverse_khintchine(seed));
  report.criteria.push_back(gaussian_moments());
  report.criteria.push_back(lacunary_norms(seed));
  report.criteria.push_back(matrix_norms(seed));
  report.criteria.push_back(grothendieck_sweep(seed));
  report.criteria.push_back(empirical_constants(seed, &report.empirical));
  report.invariants = invariant_checks(seed);
  return report;
}

}  // namespace cubelab::verify
