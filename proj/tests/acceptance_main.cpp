// Acceptance suite: runs every acceptance check at its pinned tolerance and
// prints one pass/fail line per check.  Exit code is the number of failures.
#include <cstdio>
#include <string>

#include "susyprop/checks.hpp"

int main(int argc, char** argv) {
  susyprop::CheckOptions opts;
  opts.threads = 0;  // all hardware threads
  if (argc > 1) opts.threads = std::atoi(argv[1]);

  const auto results = susyprop::run_acceptance(opts);
  int failures = 0;
  int i = 0;
  for (const auto& r : results) {
    ++i;
    if (!r.pass) ++failures;
    std::printf("[%2d/%zu] %s  %-36s  metric=%-12.4g tol=%-10.3g (%.1fs)\n", i,
                results.size(), r.pass ? "PASS" : "FAIL", r.name.c_str(), r.metric,
                r.tolerance, r.seconds);
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/%zu checks passed\n", results.size() - failures,
              results.size());
  return failures;
}
