#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grr/dyadic.hpp"

namespace grr {

/// One checked instance.
struct SuiteRecord {
  std::string group;
  /// Subgroup, class, scenario or connection set the check ran on.
  std::string subgroup;
  /// Name of the individual check.
  std::string lemma;
  BigInt count;
  /// Exact bound 2^(bound_num / bound_den_exp); absent for non-counting checks.
  std::optional<long long> bound_num;
  long long bound_den_exp = 1;
  /// Floating exponent for bounds with transcendental terms.
  std::optional<double> advisory_exponent;
  bool holds = true;
  /// "pass", "fail", "degenerate" or "skipped".
  std::string status = "pass";
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  int max_order = 0;
  std::vector<SuiteRecord> records;

  int failures() const;
  bool passed() const { return failures() == 0; }
};

/// The accepted suite ids, in a fixed order.
const std::vector<std::string>& suite_ids();

/// Runs one suite over the corpus groups of order <= max_order. Throws on an
/// unknown suite id. ProofViolation faults propagate.
VerificationReport verify_suite(const std::string& suite, int max_order, const std::vector<std::string>& corpus);

}  // namespace grr
