#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dnt::reproduce {

/// One reference check: a value recomputed from raw inputs and compared with
/// its published counterpart at a pinned tolerance.
struct CheckResult {
  std::string group;     // nonexcl | combine | weights | fusion | column | game
  std::string name;      // e.g. "u(VP,P)" or "equilibrium"
  std::string expected;  // rendered expected value
  std::string actual;    // rendered recomputed value
  double delta;          // |expected - actual| for numeric checks, 0 otherwise
  double tolerance;      // pinned comparison tolerance (0 = exact)
  bool passed;
};

struct Options {
  /// Restrict to one group.
  std::optional<std::string> only_group;
  /// Replace every numeric check's tolerance.
  std::optional<double> tolerance_override;
  /// Test hook: perturb one input of this group so its checks fail.
  std::optional<std::string> perturb_group;
};

const std::vector<std::string>& group_names();

/// Recomputes every bundled reference value and compares. Deterministic
/// order; one CheckResult per published figure.
std::vector<CheckResult> run_checks(const Options& options = {});

}  // namespace dnt::reproduce
