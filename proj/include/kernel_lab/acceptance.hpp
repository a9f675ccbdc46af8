#pragma once

// The acceptance suite: each criterion is a function producing a Report.
// Shared by `kernel-lab selftest` and the acceptance test binary.

#include <string>
#include <vector>

#include "kernel_lab/defaults.hpp"
#include "kernel_lab/report.hpp"
#include "kernel_lab/rkhs.hpp"

namespace kernel_lab {

struct AcceptanceOptions {
  Defaults defaults{};
  /// Negative control forwarded to the kernel and extension routines.
  RkhsOptions rkhs{};
};

enum class FailureKind { none, verification, invalid_input, tolerance };

struct CriterionOutcome {
  int id = 0;
  std::string title;
  Report report;
  FailureKind failure = FailureKind::none;
  std::string error;  ///< exception message, if one escaped

  bool pass() const { return failure == FailureKind::none && report.overall_pass(); }
};

/// Criteria evaluated in-process (1 to 11). Criterion 12 concerns the CLI
/// binary itself and is driven from outside.
inline constexpr int kInProcessCriteria = 11;

std::string criterion_title(int id);

/// Runs one criterion; exceptions are caught and classified.
CriterionOutcome run_criterion(int id, const AcceptanceOptions& opts);

/// Runs criteria 1 to 11 in order and merges their records, each name
/// prefixed by "C<id> ". Also checks the report schema version.
Report selftest_report(const AcceptanceOptions& opts, std::vector<CriterionOutcome>* outcomes = nullptr);

/// Deterministic points in the disk of radius `rmax`, from a 64-bit
/// Mersenne Twister; the mapping to doubles is fixed so the points do not
/// depend on the standard library.
std::vector<Point> random_disk_points(std::uint64_t seed, int count, double rmax);

}  // namespace kernel_lab
