#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace hardy {

/// Flat key/value experiment configuration. Keys match the CLI flag
/// names; unknown keys are rejected so typos surface as errors instead
/// of silently falling back to defaults.
class RunConfig {
 public:
  void set(const std::string& key, const std::string& value);
  static RunConfig from_file(const std::string& path);

  std::optional<std::string> get(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  int get_int(const std::string& key, int fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const;
  std::vector<std::string> get_names(const std::string& key,
                                     const std::string& fallback) const;

  std::vector<std::pair<std::string, std::string>> entries() const;
  static const std::vector<std::string>& known_keys();

 private:
  std::map<std::string, std::string> kv_;
};

const std::vector<std::string>& experiment_names();
bool is_experiment(const std::string& name);

/// Runs one experiment (or "all") and returns its report rows in a
/// deterministic order. Configuration errors and violated preconditions
/// throw std::invalid_argument before any computation starts.
std::vector<ReportRow> run_experiment(const std::string& name, const RunConfig& cfg);

void write_csv_file(const std::string& path, std::span<const ReportRow> rows);
void write_json_file(const std::string& path, std::span<const ReportRow> rows,
                     const RunConfig& cfg);

}  // namespace hardy
