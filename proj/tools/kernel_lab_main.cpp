// kernel-lab: runs verification scenarios and writes JSON reports and CSV
// tables.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 invalid input,
// 3 quadrature did not reach its tolerance.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "kernel_lab/commands.hpp"
#include "kernel_lab/errors.hpp"

namespace fs = std::filesystem;
using namespace kernel_lab;

namespace {

enum Exit { kPass = 0, kVerification = 1, kInvalid = 2, kTolerance = 3 };

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel lab: Green functions, fractional harmonic kernels and their verification"};
  app.require_subcommand(1, 1);

  std::optional<std::string> scenario_path;
  std::string out_dir = ".";
  std::optional<int> nodes;
  std::optional<std::uint64_t> seed;
  bool corrupt = false;

  const std::pair<const char*, const char*> commands[] = {
      {"kernel", "Gram matrix of a Lions kernel over the scenario points"},
      {"reproduce", "fractional Poisson extension: reproduction and trace recovery"},
      {"hadamard", "domain derivative of G under dilation against the Hadamard formula"},
      {"limit", "fractional kernel as a -> 1 against the classical kernel"},
      {"residual", "fractional Laplacian oracle: Getoor identity and mollified-Green residual"},
      {"selftest", "run the built-in verification suite"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    auto* opt = sub->add_option("--scenario", scenario_path, "scenario file (JSON)");
    if (std::string(name) != "selftest") opt->required();
    sub->add_option("--out", out_dir, "output directory")->capture_default_str();
    sub->add_option("--nodes", nodes, "boundary grid size (overrides scenario and defaults)");
    sub->add_option("--seed", seed, "seed for generated point sets");
    sub->add_flag("--debug-corrupt-constants", corrupt,
                  "negative control: replace Gamma(a)Gamma(a+1) by 1 (checks are expected to fail)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInvalid;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  CommandOutput result;
  Scenario sc;
  try {
    RunOptions opts;
    opts.defaults = load_defaults();
    if (seed) opts.defaults.seed = *seed;
    if (nodes) {
      opts.defaults.boundary_nodes = *nodes;
      opts.defaults = Defaults::from_json(opts.defaults.to_json());
    }
    opts.corrupt_constants = corrupt;
    sc = scenario_path ? Scenario::load(*scenario_path, opts.defaults) : Scenario::selftest(opts.defaults);
    if (command_name(sc.command) != command) {
      throw ContractError("scenario is for '" + command_name(sc.command) + "', not '" + command + "'");
    }
    if (nodes) sc.nodes = *nodes;
    result = run_command(sc, opts);
  } catch (const ToleranceError& e) {
    std::cerr << "kernel-lab: tolerance failure: " << e.what() << " (estimate " << format_double(e.estimate())
              << ", error " << format_double(e.error_estimate()) << ")\n";
    return kTolerance;
  } catch (const ConsistencyError& e) {
    std::cerr << "kernel-lab: consistency failure: " << e.what() << "\n";
    return kVerification;
  } catch (const std::logic_error& e) {
    std::cerr << "kernel-lab: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "kernel-lab: " << e.what() << "\n";
    return kInvalid;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.report.timing = {{"timestamp", utc_timestamp()}, {"wall_seconds", wall}};

  try {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / sc.report_name, result.report.to_json().dump(2) + "\n");
    if (result.table) write_file(fs::path(out_dir) / sc.table_name, result.table->to_csv());
  } catch (const std::exception& e) {
    std::cerr << "kernel-lab: " << e.what() << "\n";
    return kInvalid;
  }

  int failed = 0;
  for (const auto& r : result.report.records) {
    if (!r.pass) {
      ++failed;
      std::cerr << "FAIL " << r.name << ": computed " << format_double(r.computed) << ", reference "
                << format_double(r.reference) << "\n";
    }
  }
  std::cout << command << ": " << result.report.records.size() - failed << "/" << result.report.records.size()
            << " checks passed -> " << (fs::path(out_dir) / sc.report_name).string() << "\n";
  return result.report.overall_pass() ? kPass : kVerification;
}
