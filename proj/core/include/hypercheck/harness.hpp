#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypercheck/catalog.hpp"
#include "hypercheck/sweep_config.hpp"

namespace hypercheck {

enum class Outcome { pass, fail, skip };

[[nodiscard]] std::string_view to_string(Outcome outcome);

/// Result of checking one instance.
struct InstanceResult {
  IdentityInstance instance;
  Outcome outcome = Outcome::skip;
  std::string category;  ///< skip category, see Validity
  std::string reason;    ///< skip reason or failure description
  std::string note;
  std::optional<long> first_difference;  ///< series identities
  std::string lhs;  ///< rendered side values (the differing coefficients for series failures)
  std::string rhs;
};

/// Validity, evaluation and comparison of one instance: exact equality, or
/// |lhs - rhs| <= 2 target_abs_err for numeric values. Evaluator errors become
/// skips. Never throws for library errors.
[[nodiscard]] InstanceResult check_instance(const Catalog& catalog, const IdentityInstance& instance);

struct VerificationReport {
  SweepConfig config;
  long enumerated = 0;
  long checked = 0;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  std::map<std::string, long> skip_reasons;  ///< skip counts per category
  std::vector<InstanceResult> failures;
  std::vector<InstanceResult> skips;
  std::string mutation = "none";
  std::optional<double> wall_time_ms;

  [[nodiscard]] bool ok() const { return failed == 0; }
  [[nodiscard]] bool nothing_checked() const { return checked == 0; }
  /// {config, totals, failures[], skips[], meta}; stable key order.
  [[nodiscard]] std::string to_json() const;
  /// Short human-readable summary.
  [[nodiscard]] std::string summary() const;
};

struct RunOptions {
  bool timing = false;  ///< record wall time (reports then differ between runs)
};

/// Every instance described by the config, in enumeration order. Integer
/// ranges and value lists vary slowest in declaration order; rational samples
/// vary fastest. Throws ConfigError for unknown identities or parameters that
/// do not match the identity schema.
[[nodiscard]] std::vector<IdentityInstance> enumerate_instances(const SweepConfig& config, const Catalog& catalog);

/// Deterministic given the config (seed included); results are merged in
/// enumeration order whatever the thread count.
[[nodiscard]] VerificationReport run_sweep(const SweepConfig& config, const Catalog& catalog,
                                           const RunOptions& options = {});
[[nodiscard]] VerificationReport run_sweep(const SweepConfig& config, const RunOptions& options = {});

/// Greedy descent on a failing instance: integer parameters step toward 0,
/// non-integer rationals step their numerator toward 0, each step kept only
/// while the instance still fails. Returns the instance unchanged if it does
/// not fail.
[[nodiscard]] IdentityInstance shrink_counterexample(const Catalog& catalog, const IdentityInstance& instance);

}  // namespace hypercheck
