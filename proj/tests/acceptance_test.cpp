// Runs every acceptance criterion and module invariant at full size and
// prints one PASS/FAIL line per check. Exit status 0 only if all pass.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cubelab/verify.hpp"

int main(int argc, char** argv) {
  namespace v = cubelab::verify;
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;

  const std::vector<std::function<v::CheckResult()>> criteria = {
      [&] { return v::walsh_orthonormality_parseval(seed); },
      [&] { return v::square_function_identity(seed); },
      [&] { return v::weak_type_bounds(seed); },
      [&] { return v::cz_decomposition(seed); },
      [&] { return v::khintchine_fourth_moment(seed); },
      [&] { return v::reverse_khintchine(seed); },
      [&] { return v::gaussian_moments(); },
      [&] { return v::lacunary_norms(seed); },
      [&] { return v::matrix_norms(seed); },
      [&] { return v::grothendieck_sweep(seed); },
      [&] { return v::empirical_constants(seed, nullptr); },
  };

  int failures = 0;
  const auto report = [&](const v::CheckResult& r, double seconds) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << seconds
              << " s): " << r.detail << std::endl;
    if (!r.passed) ++failures;
  };

  std::cout << "acceptance run, seed " << seed << std::endl;
  for (const auto& check : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const v::CheckResult r = check();
    report(r, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  const auto start = std::chrono::steady_clock::now();
  const auto invariants = v::invariant_checks(seed);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& r : invariants) report(r, secs / invariants.size());

  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
