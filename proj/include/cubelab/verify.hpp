#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cubelab::verify {

struct Metric {
  std::string name;
  double value = 0.0;
};

struct CheckResult {
  std::string id;  // "A1".."A11" for acceptance criteria, "I..." for invariants
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<Metric> metrics;
};

// Observed sup of ||M f||_p / ||f||_p and ||S f||_4 / ||f||_4 at one ell.
struct EmpiricalRow {
  int ell = 0;
  int samples = 0;
  double maximal_p1_5 = 0.0;
  double maximal_p2 = 0.0;
  double maximal_p3 = 0.0;
  double maximal_p4 = 0.0;
  double square_l4 = 0.0;
};

// Acceptance criteria. Each is self-contained and deterministic in `seed`.
CheckResult walsh_orthonormality_parseval(std::uint64_t seed);
CheckResult square_function_identity(std::uint64_t seed);
CheckResult weak_type_bounds(std::uint64_t seed);
CheckResult cz_decomposition(std::uint64_t seed);
CheckResult khintchine_fourth_moment(std::uint64_t seed);
CheckResult reverse_khintchine(std::uint64_t seed);
CheckResult gaussian_moments();
CheckResult lacunary_norms(std::uint64_t seed);
CheckResult matrix_norms(std::uint64_t seed);
CheckResult grothendieck_sweep(std::uint64_t seed);
CheckResult empirical_constants(std::uint64_t seed, std::vector<EmpiricalRow>* rows);

std::vector<EmpiricalRow> empirical_table(std::uint64_t seed, int max_ell = 12,
                                          int samples_per_ell = 10000);

// Module invariants beyond the acceptance list.
std::vector<CheckResult> invariant_checks(std::uint64_t seed);

struct Report {
  std::uint64_t seed = 0;
  std::vector<CheckResult> criteria;
  std::vector<CheckResult> invariants;
  std::vector<EmpiricalRow> empirical;

  bool all_passed() const;
};

Report verify_all(std::uint64_t seed);

}  // namespace cubelab::verify
