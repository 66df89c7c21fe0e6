#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncnn/recurrences.hpp"

namespace ncnn {

enum class VerifyLevel { Quick, Full };

/// Brute-force semilength limit, series order and structural-check limit
/// for each level.
struct VerifyLimits {
  std::size_t oracle_n;
  std::size_t series_order;
  std::size_t structure_n;
};

VerifyLimits limits_for(VerifyLevel level);

/// The recurrence and closed-form tables under test.
struct VerifyTables {
  NonNesting231System nonnesting;
  NonCrossing231System noncrossing;
  std::map<std::string, SequenceTable> closed_forms;  // keyed by family name
};

VerifyTables compute_verify_tables(std::size_t max_n);

struct CheckResult {
  std::string name;
  std::string description;
  bool passed = true;
  /// First mismatch, e.g. "n=3 family=p231 expected=17 got=18".
  std::string failure;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Quick;
  /// Applied to the tables before any comparison; test fixtures use it to
  /// plant a wrong value.
  std::function<void(VerifyTables&)> tamper;
  std::size_t workers = 1;
};

/// Cross-checks brute force, recurrences, closed forms and the series
/// solver, plus the structural properties of 231-avoiders.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace ncnn
