#pragma once

// Property sweeps behind `pbw verify`.  Samples are independent: each one
// draws from its own generator seeded by (seed, index), so reports do not
// depend on the number of worker threads.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbw/lusztig.hpp"

namespace pbw {

struct VerifyOptions {
  TypeRank type;
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::optional<Count> max_count;  // per-suite default when unset
  bool inject_fault = false;       // run against corrupted rank-2 rules
  unsigned threads = 0;            // 0: hardware concurrency
};

struct VerifyReport {
  std::string suite;
  std::string type;
  std::size_t cases = 0;
  std::vector<std::string> counterexamples;  // sorted

  bool passed() const { return counterexamples.empty(); }
};

const std::vector<std::string>& suite_names();
// Throws pbw::Error for an unknown suite.
VerifyReport run_suite(const VerifyOptions& opts);
std::string format_report(const VerifyReport& report, std::size_t max_listed = 10);

// Rank-2 rules with a deliberate weight-breaking defect.
const Rank2Rules& faulty_rules();

}  // namespace pbw
