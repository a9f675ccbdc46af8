#pragma once

// Command runners behind the kernel-lab executable. Each returns a report
// and, where the command produces one, a CSV table; writing files and
// mapping outcomes to exit codes is left to the caller.

#include <optional>
#include <string>
#include <vector>

#include "kernel_lab/acceptance.hpp"
#include "kernel_lab/report.hpp"
#include "kernel_lab/scenario.hpp"

namespace kernel_lab {

/// Numeric table written as CSV with a fixed header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// LF line endings, '.' decimal separator, 17 significant digits.
  std::string to_csv() const;
};

struct CommandOutput {
  Report report;
  std::optional<Table> table;
};

struct RunOptions {
  Defaults defaults{};
  /// Negative control: Gamma(a)Gamma(a+1) replaced by 1.
  bool corrupt_constants = false;
};

CommandOutput cmd_kernel(const Scenario& sc, const RunOptions& opts);
CommandOutput cmd_reproduce(const Scenario& sc, const RunOptions& opts);
CommandOutput cmd_hadamard(const Scenario& sc, const RunOptions& opts);
CommandOutput cmd_limit(const Scenario& sc, const RunOptions& opts);
CommandOutput cmd_residual(const Scenario& sc, const RunOptions& opts);
CommandOutput cmd_selftest(const RunOptions& opts);

/// Dispatches on sc.command and echoes the scenario into the report.
CommandOutput run_command(const Scenario& sc, const RunOptions& opts);

/// Formats a double with 17 significant digits ("%.17g").
std::string format_double(double v);

}  // namespace kernel_lab
