// Runs acceptance criteria and prints one line per criterion.
// Arguments are criterion ids or tags; none runs all sixteen.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "robinsq/verification.hpp"

int main(int argc, char** argv) {
  robinsq::VerifyOptions options;
  for (int i = 1; i < argc; ++i) options.only.emplace_back(argv[i]);
  std::vector<robinsq::CriterionResult> results;
  try {
    results = robinsq::run_acceptance(options);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  int failed = 0;
  for (const auto& r : results) {
    std::printf("criterion %2d %-22s %s  %s\n", r.id, r.name.c_str(), r.passed ? "PASS" : "FAIL",
                r.detail.c_str());
    failed += r.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
