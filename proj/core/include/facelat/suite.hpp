#pragma once

#include <string>
#include <vector>

#include "facelat/arrangement.hpp"

namespace facelat {

enum class CheckStatus {
  Pass,
  Fail,
  Skipped,   // hypothesis of the property not met by this arrangement
  Recorded,  // observation only, never fails
  Error,     // the check raised an exception
};

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string details;  // JSON object text
};

struct SuiteReport {
  std::vector<CheckResult> results;
  /// No check failed or errored.
  bool passed() const;
  /// {"passed": bool, "checks": [{"name", "status", "details"}, ...]}
  std::string to_json() const;
};

/// om-axioms, equivalence, lattice, self-dual, sublattice, join-irr,
/// semidistributive, mobius, cones, edelman-walker, conjecture.
const std::vector<std::string>& suite_check_names();

/// Runs the named checks in order. Unknown names and exceptions become
/// Error entries; nothing is thrown for per-check problems.
SuiteReport run_suite(const Arrangement& arr, const std::vector<std::string>& checks);

}  // namespace facelat
