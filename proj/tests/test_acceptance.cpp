// Acceptance gate: runs the full reproduction suite in-process, printing one
// pass/fail line per criterion with its measured values, then drives the
// installed binary end-to-end as the final criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include "curvcones/verify.hpp"

using namespace curvcones;

namespace {

// Criterion order matches the check order inside run_verification().
const char* kCriteria[] = {
    "criterion-01 cp2-golden-spectrum",
    "criterion-02 sphere-circle-boundary",
    "criterion-03 round-sphere-family",
    "criterion-04 scalar-trace-identity",
    "criterion-05 interpolation-suite",
    "criterion-06 monotonicity-nesting",
    "criterion-07 fd-charts",
    "criterion-08 kahler-suite",
    "criterion-09 betti-table",
    "criterion-10 splitting-pinching",
};

}  // namespace

TEST_CASE("criteria 1-10: reproduction suite") {
  const std::vector<CheckResult> results = run_verification();
  REQUIRE(results.size() == 10);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CheckResult& r = results[i];
    std::printf("%s %s: %s (%.1f ms, budget %.0f ms)\n",
                r.passed ? "PASS" : "FAIL", kCriteria[i], r.detail.c_str(),
                r.elapsed_ms, r.budget_ms);
    std::fflush(stdout);
    CHECK_MESSAGE(r.passed, r.name, ": ", r.detail);
    CHECK(r.name == std::string(kCriteria[i]).substr(13));
  }
}

TEST_CASE("criterion 11: verify-paper end-to-end") {
  // Baked in at compile time; the environment can override for manual runs.
  const char* bin = std::getenv("CURVCONES_BIN_OVERRIDE");
  const std::string cmd =
      std::string(bin != nullptr ? bin : CURVCONES_BIN_PATH) +
      " verify-paper 2>&1";

  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  const int status = pclose(pipe);
  const double wall_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  const bool passed =
      code == 0 && wall_s < 60.0 &&
      output.find("all checks passed") != std::string::npos;
  std::printf("%s criterion-11 verify-paper-end-to-end: exit %d in %.1f s "
              "(budget 60 s)\n",
              passed ? "PASS" : "FAIL", code, wall_s);
  std::fflush(stdout);
  CHECK(code == 0);
  CHECK(wall_s < 60.0);
  CHECK(output.find("all checks passed") != std::string::npos);
}
