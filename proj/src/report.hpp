#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace hardy {

/// One verification outcome. Unset numeric fields stay NaN and are
/// emitted as empty CSV cells / JSON nulls.
struct CheckReport {
  std::string check;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  double ratio = std::numeric_limits<double>::quiet_NaN();
  double constant = std::numeric_limits<double>::quiet_NaN();
  bool pass = false;

  // context
  int dim = 0;
  double p = std::numeric_limits<double>::quiet_NaN();
  double s = std::numeric_limits<double>::quiet_NaN();
  double q = std::numeric_limits<double>::quiet_NaN();
  double kappa = std::numeric_limits<double>::quiet_NaN();
  int points = 0;
  double halfwidth = std::numeric_limits<double>::quiet_NaN();
  std::string note;
};

/// A CheckReport plus the experiment label and wall time, i.e. one line
/// of the CSV/JSON output.
struct ReportRow {
  std::string experiment;
  CheckReport report;
  double seconds = 0.0;
};

/// Shortest decimal string that round-trips the value ('.' decimal point,
/// no locale); NaN renders as the empty string.
std::string format_double(double v);

/// Fixed column set: experiment,n,p,s,q,kappa,N,L,lhs,rhs,ratio,pass,seconds.
std::string to_csv(std::span<const ReportRow> rows);

/// Same values as the CSV plus per-row notes, under "rows", with the
/// resolved configuration echoed under "config".
nlohmann::json to_json(std::span<const ReportRow> rows,
                       const std::vector<std::pair<std::string, std::string>>& config);

std::string summary_table(std::span<const ReportRow> rows);

}  // namespace hardy
