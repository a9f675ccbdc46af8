#include "kernel_lab/report.hpp"

#include <cmath>
#include <stdexcept>

namespace kernel_lab {

namespace {

const char* kind_name(ToleranceKind k) { return k == ToleranceKind::absolute ? "abs" : "rel"; }

ToleranceKind kind_from(const std::string& s) {
  if (s == "abs") return ToleranceKind::absolute;
  if (s == "rel") return ToleranceKind::relative;
  throw std::invalid_argument("unknown tolerance kind '" + s + "'");
}

// JSON has no NaN/inf; they are written as strings and read back.
nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double read_number(const nlohmann::ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  throw std::invalid_argument("bad numeric value '" + s + "'");
}

}  // namespace

CheckRecord CheckRecord::compare(std::string name, double computed, double reference, double tolerance,
                                 ToleranceKind kind, double scale) {
  CheckRecord r;
  r.name = std::move(name);
  r.computed = computed;
  r.reference = reference;
  r.abs_error = std::abs(computed - reference);
  const double denom = scale > 0.0 ? scale : std::abs(reference);
  r.rel_error = denom > 0.0 ? r.abs_error / denom : r.abs_error;
  r.tolerance = tolerance;
  r.kind = kind;
  const double err = kind == ToleranceKind::absolute ? r.abs_error : r.rel_error;
  r.pass = std::isfinite(computed) && err <= tolerance;
  return r;
}

CheckRecord CheckRecord::flag(std::string name, bool ok, double measured) {
  CheckRecord r;
  r.name = std::move(name);
  r.computed = measured;
  r.reference = measured;
  r.tolerance = 0.0;
  r.pass = ok;
  return r;
}

CheckRecord CheckRecord::at_most(std::string name, double value, double bound) {
  CheckRecord r;
  r.name = std::move(name);
  r.computed = value;
  r.reference = 0.0;
  r.abs_error = std::abs(value);
  r.rel_error = r.abs_error;
  r.tolerance = bound;
  r.pass = std::isfinite(value) && value <= bound;
  return r;
}

bool Report::overall_pass() const {
  for (const auto& r : records) {
    if (!r.pass) return false;
  }
  return true;
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto r : other.records) {
    r.name = prefix + r.name;
    records.push_back(std::move(r));
  }
}

const CheckRecord* Report::find(const std::string& name) const {
  for (const auto& r : records) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["overall_pass"] = overall_pass();
  j["scenario"] = scenario;
  j["metadata"] = metadata;
  auto& recs = j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json e;
    e["name"] = r.name;
    e["computed"] = number(r.computed);
    e["reference"] = number(r.reference);
    e["abs_error"] = number(r.abs_error);
    e["rel_error"] = number(r.rel_error);
    e["tolerance"] = number(r.tolerance);
    e["tolerance_kind"] = kind_name(r.kind);
    e["pass"] = r.pass;
    recs.push_back(std::move(e));
  }
  j["timing"] = timing;
  return j;
}

Report Report::from_json(const nlohmann::ordered_json& j) {
  Report rep;
  rep.schema_version = j.at("schema_version").get<std::string>();
  rep.command = j.at("command").get<std::string>();
  rep.scenario = j.value("scenario", nlohmann::ordered_json::object());
  rep.metadata = j.value("metadata", nlohmann::ordered_json::object());
  rep.timing = j.value("timing", nlohmann::ordered_json::object());
  for (const auto& e : j.at("records")) {
    CheckRecord r;
    r.name = e.at("name").get<std::string>();
    r.computed = read_number(e.at("computed"));
    r.reference = read_number(e.at("reference"));
    r.abs_error = read_number(e.at("abs_error"));
    r.rel_error = read_number(e.at("rel_error"));
    r.tolerance = read_number(e.at("tolerance"));
    r.kind = kind_from(e.at("tolerance_kind").get<std::string>());
    r.pass = e.at("pass").get<bool>();
    rep.records.push_back(std::move(r));
  }
  return rep;
}

std::string Report::stable_dump() const {
  auto j = to_json();
  j.erase("timing");
  return j.dump(2);
}

}  // namespace kernel_lab
