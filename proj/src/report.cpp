#include "report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace hardy {

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

static std::string format_int(int v) { return v == 0 ? "" : std::to_string(v); }

std::string to_csv(std::span<const ReportRow> rows) {
  std::string out = "experiment,n,p,s,q,kappa,N,L,lhs,rhs,ratio,pass,seconds\n";
  for (const auto& row : rows) {
    const CheckReport& r = row.report;
    out += row.experiment;
    out += ',';
    out += format_int(r.dim);
    out += ',';
    out += format_double(r.p);
    out += ',';
    out += format_double(r.s);
    out += ',';
    out += format_double(r.q);
    out += ',';
    out += format_double(r.kappa);
    out += ',';
    out += format_int(r.points);
    out += ',';
    out += format_double(r.halfwidth);
    out += ',';
    out += format_double(r.lhs);
    out += ',';
    out += format_double(r.rhs);
    out += ',';
    out += format_double(r.ratio);
    out += ',';
    out += r.pass ? '1' : '0';
    out += ',';
    out += format_double(row.seconds);
    out += '\n';
  }
  return out;
}

static nlohmann::json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

nlohmann::json to_json(std::span<const ReportRow> rows,
                       const std::vector<std::pair<std::string, std::string>>& config) {
  nlohmann::json doc;
  doc["config"] = nlohmann::json::object();
  for (const auto& [k, v] : config) doc["config"][k] = v;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    const CheckReport& r = row.report;
    nlohmann::json j;
    j["experiment"] = row.experiment;
    j["n"] = r.dim == 0 ? nlohmann::json(nullptr) : nlohmann::json(r.dim);
    j["p"] = number_or_null(r.p);
    j["s"] = number_or_null(r.s);
    j["q"] = number_or_null(r.q);
    j["kappa"] = number_or_null(r.kappa);
    j["N"] = r.points == 0 ? nlohmann::json(nullptr) : nlohmann::json(r.points);
    j["L"] = number_or_null(r.halfwidth);
    j["lhs"] = number_or_null(r.lhs);
    j["rhs"] = number_or_null(r.rhs);
    j["ratio"] = number_or_null(r.ratio);
    j["pass"] = r.pass;
    j["seconds"] = row.seconds;
    if (!r.note.empty()) j["note"] = r.note;
    doc["rows"].push_back(j);
  }
  return doc;
}

std::string summary_table(std::span<const ReportRow> rows) {
  std::ostringstream os;
  std::size_t width = 10;
  for (const auto& row : rows) width = std::max(width, row.experiment.size());
  os << "  " << std::string(width, '-') << "\n";
  std::size_t passed = 0;
  for (const auto& row : rows) {
    const CheckReport& r = row.report;
    os << (r.pass ? "  ok   " : "  FAIL ") << row.experiment;
    os << std::string(width + 2 - row.experiment.size(), ' ');
    os << "lhs=" << format_double(r.lhs) << " rhs=" << format_double(r.rhs)
       << " ratio=" << format_double(r.ratio);
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "\n";
    if (r.pass) ++passed;
  }
  os << "  " << std::string(width, '-') << "\n";
  os << "  " << passed << "/" << rows.size() << " checks passed\n";
  return os.str();
}

}  // namespace hardy
