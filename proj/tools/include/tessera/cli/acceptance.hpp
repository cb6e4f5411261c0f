#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tessera/algebra_io.hpp"

namespace tessera::cli {

// Raw-mode Z4 survivors (left-standard): every unital sign array whose
// determinants are positive definite. Recorded on the first full run.
inline constexpr std::size_t kPinnedRawZ4Survivors = 4;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  // Set when the check departs from the literal wording; explains how.
  std::string note;
  double seconds = 0.0;
  // Per-case wall times for criteria with runtime bounds.
  std::vector<std::pair<std::string, double>> timings;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
};

struct CriterionInfo {
  int id;
  std::string title;
};
const std::vector<CriterionInfo>& criteria();

// Throws std::out_of_range for an unknown id. Exceptions inside a check become a failed result.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {}, const std::vector<int>& ids = {});

// "PASS   3  Rejection completeness: ...", with " [1.230 s]" appended when `timings` is set.
// Reports without timings are byte-identical across runs with the same seed.
std::string format_line(const CriterionResult& r, bool timings = false);
Json to_json(const std::vector<CriterionResult>& results, bool timings = false);

}  // namespace tessera::cli
