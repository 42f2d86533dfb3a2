#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace monophilic {

enum class Suite { Fast, Full };

struct VerifyOptions {
  Suite suite = Suite::Fast;
  int threads = 1;
  std::uint64_t seed = 7;
  // Test hook: perturbs the closed-form type A path count so the harness can
  // be shown to report a failure.
  bool corrupt_path_formula = false;
};

enum class Status { Pass, Fail, Skipped };

struct CriterionResult {
  int id = 0;
  std::string name;
  Status status = Status::Skipped;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

// One line, e.g. "criterion 6 [K_{2,3} minimum]: PASS (min 2, uniform 2; 0.00 s)".
std::string format_result(const CriterionResult& r);

// Runs criterion `id` (1..12). A criterion fails when its check fails, when
// it throws, or when it exceeds its time limit.
CriterionResult run_criterion(int id, const VerifyOptions& options);

// All twelve criteria in order; the fast suite skips 5 and 10. on_result is
// called as each criterion finishes.
std::vector<CriterionResult> run_suite(const VerifyOptions& options,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace monophilic
