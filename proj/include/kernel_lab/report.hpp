#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace kernel_lab {

inline constexpr const char* kReportSchemaVersion = "kernel-lab.report/1";

enum class ToleranceKind { absolute, relative };

/// One verified quantity. `pass` is decided by the producer from the error
/// of the declared kind against the tolerance.
struct CheckRecord {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  ToleranceKind kind = ToleranceKind::absolute;
  bool pass = false;

  /// Record comparing computed with reference. rel_error is taken against
  /// `scale` when given, else against |reference|.
  static CheckRecord compare(std::string name, double computed, double reference, double tolerance,
                             ToleranceKind kind, double scale = 0.0);
  /// Record of a boolean property; computed/reference are 1/0 flags.
  static CheckRecord flag(std::string name, bool ok, double measured = 0.0);
  /// Record whose value must not exceed a bound.
  static CheckRecord at_most(std::string name, double value, double bound);
};

/// Persisted outcome of one verification run.
struct Report {
  std::string schema_version = kReportSchemaVersion;
  std::string command;
  nlohmann::ordered_json scenario = nlohmann::ordered_json::object();
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
  std::vector<CheckRecord> records;
  /// Isolated volatile fields (timestamp, wall time); excluded from
  /// determinism comparisons.
  nlohmann::ordered_json timing = nlohmann::ordered_json::object();

  /// True iff every record passes (vacuously true when empty).
  bool overall_pass() const;
  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const Report& other, const std::string& prefix = "");
  const CheckRecord* find(const std::string& name) const;

  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::ordered_json& j);
  /// Serialized form without the timing block.
  std::string stable_dump() const;
};

}  // namespace kernel_lab
