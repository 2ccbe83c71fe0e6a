#pragma once

#include <string>
#include <vector>

#include "pquant/serialize.hpp"

namespace pquant {

struct VerifyParams {
  int n = 2;
  int max_k = 3;
  int max_xdeg = 2;
  std::uint64_t seed = 20240601;
};

struct CheckResult {
  std::string group;
  std::string name;
  bool passed = false;
  /// Witness for a passing inequation, or a short note.
  std::string detail;
  /// Serialized failing input; null when the check passed.
  Json counterexample;
};

struct VerificationReport {
  std::string suite;
  VerifyParams params;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  /// True when every check of the group passed (and there is at least one).
  bool group_passed(const std::string& group) const;
  Json to_json() const;
};

/// koszul | casimir | lieop | quantization | lemma | classification.
/// Throws ArgumentError for an unknown suite or out-of-range parameters.
VerificationReport run_suite(const std::string& name, const VerifyParams& params);

std::vector<std::string> suite_names();

}  // namespace pquant
