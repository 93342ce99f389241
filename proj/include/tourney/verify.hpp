#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

struct VerificationReport {
  std::string theorem_id;
  std::string universe;            // what was swept, human-readable
  std::uint64_t checked = 0;       // instances examined
  std::vector<std::string> failures;  // counterexamples as tournament lines
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty() && checked > 0; }

  /// Deterministic key: value text; elapsed goes last and can be dropped so
  /// reports compare bit-for-bit across runs and parallelism degrees.
  std::string to_text(bool include_elapsed = true) const;
};

/// Runs the registered suite for theorem_id over instances up to max_n
/// vertices (suites clamp to their supported range). jobs > 1 shards the
/// instance stream across threads; results are merged in instance order, so
/// the report does not depend on the schedule. Unknown id ->
/// std::invalid_argument.
VerificationReport run_suite(const std::string& theorem_id, int max_n, int jobs = 1);

std::vector<std::string> suite_ids();
std::string suite_description(const std::string& theorem_id);

}  // namespace tourney
