#include <cstdlib>
#include <iostream>

#include "tessera/cli/acceptance.hpp"

// One line per criterion; the exit status is nonzero when any criterion fails.
int main(int argc, char** argv) {
  tessera::cli::AcceptanceOptions options;
  if (const char* seed = std::getenv("TESSERA_SEED")) options.seed = std::strtoull(seed, nullptr, 10);
  bool timings = argc > 1 && std::string(argv[1]) == "--timings";
  int failed = 0;
  for (const auto& info : tessera::cli::criteria()) {
    auto r = tessera::cli::run_criterion(info.id, options);
    std::cout << tessera::cli::format_line(r, timings) << std::endl;
    failed += !r.passed;
  }
  std::cout << (14 - failed) << "/14 criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
