// Runs every acceptance criterion and prints one line per criterion.
// Criterion 12 invokes the kernel-lab binary twice and compares reports.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "kernel_lab/acceptance.hpp"

#ifndef KERNEL_LAB_EXE
#error "KERNEL_LAB_EXE must point at the kernel-lab binary"
#endif

namespace fs = std::filesystem;
using namespace kernel_lab;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Drops the "timing" member, which is the only field allowed to differ.
std::string without_timing(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) return "<unparseable>";
  j.erase("timing");
  return j.dump(2);
}

bool cli_determinism(std::string& detail) {
  const fs::path base = fs::temp_directory_path() / ("kernel-lab-accept-" + std::to_string(::getpid()));
  std::string reports[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path out = base / std::to_string(run);
    fs::create_directories(out);
    const std::string cmd =
        std::string("\"") + KERNEL_LAB_EXE + "\" selftest --out \"" + out.string() + "\" > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status != 0) {
      detail = "selftest run " + std::to_string(run + 1) + " exited with status " + std::to_string(status);
      fs::remove_all(base);
      return false;
    }
    reports[run] = slurp(out / "selftest.json");
  }
  fs::remove_all(base);
  if (reports[0].empty()) {
    detail = "no report written";
    return false;
  }
  if (without_timing(reports[0]) != without_timing(reports[1])) {
    detail = "reports differ outside the timing block";
    return false;
  }
  detail = std::to_string(reports[0].size()) + " bytes, identical modulo timing";
  return true;
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  AcceptanceOptions opts;
  opts.defaults = load_defaults();
  int failures = 0;
  for (int id = 1; id <= kInProcessCriteria; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto o = run_criterion(id, opts);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d %-36s %6.2fs\n", o.pass() ? "PASS" : "FAIL", id, o.title.c_str(), secs);
    if (!o.pass()) {
      ++failures;
      if (!o.error.empty()) std::printf("       error: %s\n", o.error.c_str());
      for (const auto& r : o.report.records) {
        if (!r.pass) {
          std::printf("       %s: computed %.17g reference %.17g abs %.3g rel %.3g tol %.3g\n", r.name.c_str(),
                      r.computed, r.reference, r.abs_error, r.rel_error, r.tolerance);
        }
      }
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  const bool ok = cli_determinism(detail);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %2d %-36s %6.2fs  %s\n", ok ? "PASS" : "FAIL", 12, criterion_title(12).c_str(), secs,
              detail.c_str());
  if (!ok) ++failures;
  std::printf("%d of 12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
