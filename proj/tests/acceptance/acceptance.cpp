#include <cstdlib>
#include <iostream>

#include "monophilic/verify.hpp"

int main(int argc, char** argv) {
  monophilic::VerifyOptions options;
  options.suite = monophilic::Suite::Full;
  if (argc > 1) options.threads = std::atoi(argv[1]);
  int failures = 0;
  monophilic::run_suite(options, [&](const monophilic::CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    if (r.status != monophilic::Status::Pass) ++failures;
  });
  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria not passing") << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
