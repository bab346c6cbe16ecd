// Command-line front end. Links against the shared library and uses only
// its public C interface.
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardycheck/hardycheck.h"

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(token);
  return out;
}

constexpr int kExitAllPassed = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hardycheck: empirical checks of Hardy-type inequalities and the "
      "maximal/Riesz operator machinery behind them"};
  app.set_config("--config", "", "flat key=value config file; flags take precedence");

  std::string experiment;
  app.add_option("experiment", experiment,
                 "one of: " + std::string(hc_experiments()))
      ->required();

  // Values are passed through to the library untouched; defaults live
  // there so the config file, the C API and the CLI stay in agreement.
  std::map<std::string, std::string> values;
  auto passthrough = [&](const std::string& name, const std::string& help) {
    app.add_option_function<std::string>(
        "--" + name, [&values, name](const std::string& v) { values[name] = v; },
        help);
  };
  passthrough("n", "dimension (1, 2 or 3)");
  passthrough("N", "grid points per axis");
  passthrough("L", "half-width of the box [-L, L]^n");
  passthrough("p", "Lebesgue exponent p > 1");
  passthrough("s", "smoothness order s");
  passthrough("q", "secondary exponent (weight power / Hoelder q)");
  passthrough("kappa", "kernel split threshold (default 100)");
  passthrough("seed", "seed for randomized inputs");
  passthrough("function", "test function for single-function experiments");
  passthrough("T", "truncation list for the sharpness sweep");
  passthrough("x-max", "half-line domain length (classical check)");
  passthrough("cells", "half-line cell count (sharpness sweep)");
  passthrough("eps", "inner cutoff list for the endpoint blow-up");
  passthrough("N-list", "refinement levels for stability studies");
  passthrough("family", "comma-separated test function family");
  passthrough("band-modes", "mode cap of the band-limited generator");
  passthrough("mode", "maximal operator mode: centered | uncentered");
  passthrough("corollary-q", "inner power of the corollary operator");
  passthrough("N-small", "grid size for the exact identity checks");
  passthrough("pairs", "number of seeded inputs for identity checks");
  passthrough("stability-tol", "allowed refinement drift (default 0.10)");
  passthrough("proof-stability-tol", "drift allowed for proof-step bounds (0.15)");
  passthrough("tol-partition", "partition identity tolerance (1e-12)");
  passthrough("tol-duality", "duality identity tolerance (1e-10)");

  std::string out_dir = "reports";
  app.add_option("--out-dir", out_dir, "report output directory")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  bool known = false;
  for (const auto& name : split_csv(hc_experiments()))
    if (name == experiment) known = true;
  if (!known) {
    std::fprintf(stderr, "unknown experiment '%s'\n\n%s\n", experiment.c_str(),
                 app.help().c_str());
    return kExitConfigError;
  }

  hc_run* run = nullptr;
  if (hc_run_create(&run) != HC_OK) {
    std::fprintf(stderr, "error: %s\n", hc_last_error());
    return kExitConfigError;
  }

  int exit_code = kExitAllPassed;
  for (const auto& [key, value] : values) {
    if (hc_run_set(run, key.c_str(), value.c_str()) != HC_OK) {
      std::fprintf(stderr, "error: %s\n", hc_last_error());
      hc_run_destroy(run);
      return kExitConfigError;
    }
  }

  if (hc_run_execute(run, experiment.c_str()) != HC_OK) {
    std::fprintf(stderr, "error: %s\n", hc_last_error());
    hc_run_destroy(run);
    return kExitConfigError;
  }

  const std::string csv_path = out_dir + "/" + experiment + ".csv";
  const std::string json_path = out_dir + "/" + experiment + ".json";
  if (hc_run_write_csv(run, csv_path.c_str()) != HC_OK ||
      hc_run_write_json(run, json_path.c_str()) != HC_OK) {
    std::fprintf(stderr, "error: %s\n", hc_last_error());
    hc_run_destroy(run);
    return kExitConfigError;
  }

  std::printf("%s", hc_run_summary(run));
  std::printf("  reports: %s, %s\n", csv_path.c_str(), json_path.c_str());

  if (!hc_run_all_passed(run)) exit_code = kExitCheckFailed;
  hc_run_destroy(run);
  return exit_code;
}
