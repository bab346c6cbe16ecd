#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "exponents.hpp"
#include "grid.hpp"
#include "hardy.hpp"
#include "maximal.hpp"
#include "spectral.hpp"
#include "testfam.hpp"

namespace hardy {

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    // trim blanks
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(token.substr(b, e - b + 1));
  }
  return out;
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: '" + key + "' is not a number: " + text);
  }
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
  const auto& known = known_keys();
  if (std::find(known.begin(), known.end(), key) == known.end())
    throw std::invalid_argument("config: unknown key '" + key + "'");
  kv_[key] = value;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  RunConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw std::invalid_argument("config: expected key=value, got: " + line);
      continue;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

std::optional<std::string> RunConfig::get(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) return std::nullopt;
  return it->second;
}

std::string RunConfig::get_string(const std::string& key,
                                  const std::string& fallback) const {
  return get(key).value_or(fallback);
}

int RunConfig::get_int(const std::string& key, int fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  const double d = parse_double(key, *v);
  if (d != std::floor(d))
    throw std::invalid_argument("config: '" + key + "' must be an integer");
  return static_cast<int>(d);
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  return parse_double(key, *v);
}

std::vector<double> RunConfig::get_list(const std::string& key,
                                        const std::vector<double>& fallback) const {
  const auto v = get(key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const auto& tok : split_tokens(*v)) out.push_back(parse_double(key, tok));
  if (out.empty()) throw std::invalid_argument("config: '" + key + "' is empty");
  return out;
}

std::vector<std::string> RunConfig::get_names(const std::string& key,
                                              const std::string& fallback) const {
  auto out = split_tokens(get_string(key, fallback));
  if (out.empty()) throw std::invalid_argument("config: '" + key + "' is empty");
  return out;
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  return {kv_.begin(), kv_.end()};
}

const std::vector<std::string>& RunConfig::known_keys() {
  static const std::vector<std::string> keys = {
      "n",        "N",         "L",           "p",
      "s",        "q",         "kappa",       "seed",
      "function", "T",         "x-max",       "cells",
      "eps",      "N-list",    "family",      "band-modes",
      "mode",     "out-dir",   "corollary-q", "N-small",
      "pairs",    "stability-tol", "proof-stability-tol",
      "tol-partition", "tol-duality",
  };
  return keys;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "verify-classical", "sharpness-sweep", "verify-cazenave",
      "verify-fractional", "endpoint-blowup", "maximal-suite",
      "proof-steps", "all"};
  return names;
}

bool is_experiment(const std::string& name) {
  const auto& names = experiment_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

TestFunction resolve_function(const std::string& name, int band_modes) {
  if (name == "gaussian") return gaussian();
  if (name == "bump") return bump();
  if (name == "plateau") return plateau();
  if (name.rfind("bandlimited:", 0) == 0) {
    const std::string seed_text = name.substr(std::string("bandlimited:").size());
    return random_bandlimited(std::stoull(seed_text), band_modes);
  }
  throw std::invalid_argument("config: unknown test function '" + name + "'");
}

std::vector<double> default_levels() {
  // 25 log-spaced thresholds in [0.01, 1]
  std::vector<double> out;
  for (int i = 0; i < 25; ++i)
    out.push_back(std::pow(10.0, -2.0 + 2.0 * i / 24.0));
  return out;
}

std::size_t node_nearest(const GridSpec& spec, double x) {
  std::size_t best = 0;
  double dist = std::numeric_limits<double>::infinity();
  for (int k = 0; k < spec.points; ++k) {
    const double d = std::abs(spec.coord(k) - x);
    if (d < dist) {
      dist = d;
      best = static_cast<std::size_t>(k);
    }
  }
  return best;
}

ReportRow make_row(std::string experiment, CheckReport r, double seconds) {
  return ReportRow{std::move(experiment), std::move(r), seconds};
}

std::vector<ReportRow> run_verify_classical(const RunConfig& cfg) {
  const double p = cfg.get_double("p", 2.0);
  const int cells = cfg.get_int("N", 4096);
  const double x_max = cfg.get_double("x-max", 128.0);
  const std::string fn = cfg.get_string("function", "indicator");
  const double T = cfg.get_double("T", 1e6);
  if (fn != "indicator" && fn != "power-cutoff")
    throw std::invalid_argument(
        "verify-classical: function must be 'indicator' or 'power-cutoff'");

  Stopwatch watch;
  const HalfLineGrid grid = HalfLineGrid::uniform(x_max, cells);
  std::vector<double> f(grid.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    f[k] = fn == "indicator" ? (grid.node[k] < 1.0 ? 1.0 : 0.0)
                             : power_cutoff(grid.node[k], p, T);
  CheckReport r = classical_hardy_check(grid, f, p);
  r.note = fn;
  return {make_row("verify-classical", std::move(r), watch.lap())};
}

std::vector<ReportRow> run_sharpness_sweep(const RunConfig& cfg) {
  const double p = cfg.get_double("p", 2.0);
  const auto T_list = cfg.get_list("T", {100.0, 10000.0, 1000000.0});
  const int cells = cfg.get_int("cells", 16384);

  Stopwatch watch;
  auto reports = classical_sharpness_sweep(p, T_list, cells);
  const double elapsed = watch.lap() / static_cast<double>(reports.size());
  std::vector<ReportRow> rows;
  for (auto& r : reports) {
    const std::string label = "sharpness-sweep:" + r.note;
    r.note.clear();
    rows.push_back(make_row(label, std::move(r), elapsed));
  }
  return rows;
}

std::vector<ReportRow> run_verify_cazenave(const RunConfig& cfg) {
  const int n = cfg.get_int("n", 2);
  const double p = cfg.get_double("p", 2.0);
  const double q = cfg.get_double("q", 1.0);
  const int N = cfg.get_int("N", 256);
  const double L = cfg.get_double("L", 8.0);
  const std::string fn = cfg.get_string("function", "gaussian");
  const int band_modes = cfg.get_int("band-modes", 6);

  const GridSpec spec = GridSpec::make(n, N, L);
  const TestFunction tf = resolve_function(fn, band_modes);

  Stopwatch watch;
  CheckReport r = cazenave_check(tf.sample(spec), p, q);
  r.note = tf.name;
  return {make_row("verify-cazenave", std::move(r), watch.lap())};
}

std::vector<ReportRow> run_verify_fractional(const RunConfig& cfg) {
  const int n = cfg.get_int("n", 1);
  const double p = cfg.get_double("p", 2.0);
  const double s = cfg.get_double("s", 0.3);
  const double L = cfg.get_double("L", 8.0);
  const auto N_list = cfg.get_list("N-list", {512.0, 1024.0, 2048.0});
  const auto family_names = cfg.get_names(
      "family", "gaussian,bump,plateau,bandlimited:1,bandlimited:2,bandlimited:3");
  const int band_modes = cfg.get_int("band-modes", 6);
  const double stability_tol = cfg.get_double("stability-tol", 0.10);

  const Exponents exps = Exponents::make(n, p, s);
  std::vector<TestFunction> family;
  for (const auto& name : family_names)
    family.push_back(resolve_function(name, band_modes));

  std::vector<ReportRow> rows;
  double c_min = std::numeric_limits<double>::infinity();
  double c_max = 0.0;
  double c_last = 0.0;
  std::vector<CheckReport> last_quotients;
  for (double N_real : N_list) {
    const int N = static_cast<int>(N_real);
    const GridSpec spec = GridSpec::make(n, N, L);
    Stopwatch watch;
    double c_n = 0.0;
    std::vector<CheckReport> quotients;
    for (const auto& tf : family) {
      CheckReport q = fractional_hardy_quotient(tf.sample(spec), exps);
      q.note = tf.name;
      c_n = std::max(c_n, q.ratio);
      quotients.push_back(std::move(q));
    }
    const double elapsed = watch.lap();
    CheckReport r;
    r.check = "empirical-constant";
    r.lhs = c_n;
    r.ratio = c_n;
    r.pass = std::isfinite(c_n) && c_n > 0.0;
    r.dim = n;
    r.p = p;
    r.s = s;
    r.points = N;
    r.halfwidth = L;
    rows.push_back(make_row("verify-fractional:constant:N=" + std::to_string(N),
                            std::move(r), elapsed));
    c_min = std::min(c_min, c_n);
    c_max = std::max(c_max, c_n);
    c_last = c_n;
    last_quotients = std::move(quotients);
  }

  for (auto& q : last_quotients) {
    const std::string label = "verify-fractional:Q:" + q.note;
    q.note.clear();
    q.pass = q.pass && q.ratio <= c_last * (1.0 + 1e-12);
    q.constant = c_last;
    rows.push_back(make_row(label, std::move(q), 0.0));
  }

  CheckReport stab;
  stab.check = "constant-stability";
  stab.lhs = c_max;
  stab.rhs = c_min;
  stab.ratio = c_max / c_min;
  stab.constant = c_last;
  stab.pass = stab.ratio <= 1.0 + stability_tol;
  stab.dim = n;
  stab.p = p;
  stab.s = s;
  stab.halfwidth = L;
  rows.push_back(make_row("verify-fractional:stability", std::move(stab), 0.0));
  return rows;
}

std::vector<ReportRow> run_endpoint_blowup(const RunConfig& cfg) {
  const int n = cfg.get_int("n", 1);
  const double p = cfg.get_double("p", 2.0);
  const int N = cfg.get_int("N", 8192);
  const double L = cfg.get_double("L", 4.0);
  auto eps = cfg.get_list("eps", {0.1, 0.05, 0.025, 0.0125});
  std::sort(eps.begin(), eps.end(), std::greater<>());

  const Exponents exps = Exponents::endpoint(n, p);
  if (const auto s_given = cfg.get("s")) {
    const double s = parse_double("s", *s_given);
    if (std::abs(s - exps.s) > 1e-12)
      throw std::invalid_argument("endpoint-blowup: s must equal n/p");
  }
  const GridSpec spec = GridSpec::make(n, N, L);

  Stopwatch watch;
  const auto table = endpoint_blowup(exps, eps, spec);
  const double elapsed = watch.lap() / static_cast<double>(table.size());

  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& row = table[i];
    CheckReport r;
    r.check = "endpoint-blowup";
    r.lhs = row.lhs;
    r.rhs = row.rhs;
    r.ratio = row.lhs / row.rhs;
    r.dim = n;
    r.p = p;
    r.s = exps.s;
    r.points = N;
    r.halfwidth = L;
    r.pass = std::isfinite(row.lhs);
    if (i > 0) {
      const bool grows = row.lhs > table[i - 1].lhs;
      const bool rhs_fixed =
          std::abs(row.rhs - table[0].rhs) <= 0.01 * std::abs(table[0].rhs);
      r.pass = r.pass && grows && rhs_fixed;
    }
    rows.push_back(make_row("endpoint-blowup:eps=" + format_double(row.eps),
                            std::move(r), elapsed));
  }
  return rows;
}

std::vector<ReportRow> run_maximal_suite(const RunConfig& cfg) {
  const int n = cfg.get_int("n", 1);
  const int N = cfg.get_int("N", 512);
  const double L = cfg.get_double("L", 8.0);
  const double p = cfg.get_double("p", 2.0);
  const double cor_q = cfg.get_double("corollary-q", 1.5);
  const double stability_tol = cfg.get_double("stability-tol", 0.10);
  const auto family_names = cfg.get_names("family", "gaussian,bump,plateau");
  const int band_modes = cfg.get_int("band-modes", 6);
  const MaximalConfig mode{cfg.get_string("mode", "centered") == "uncentered"
                               ? MaximalMode::uncentered
                               : MaximalMode::centered};

  if (n != 1)
    throw std::invalid_argument("maximal-suite: point-value checks are 1-D only");

  std::vector<TestFunction> family;
  for (const auto& name : family_names)
    family.push_back(resolve_function(name, band_modes));

  std::vector<ReportRow> rows;
  const GridSpec spec = GridSpec::make(n, N, L);
  const GridSpec spec2 = GridSpec::make(n, 2 * N, L);
  const double h = spec.spacing();

  {  // indicator of [0,1], value at x = 2
    Stopwatch watch;
    const GridFunction f = sample(spec, [](const std::array<double, 3>& x) {
      return x[0] >= 0.0 && x[0] <= 1.0 ? 1.0 : 0.0;
    });
    const std::size_t at = node_nearest(spec, 2.0);
    const GridFunction mc = maximal_centered(f);
    CheckReport r;
    r.check = "centered-point-value";
    r.lhs = mc[at];
    r.rhs = 0.25;
    r.ratio = r.lhs / r.rhs;
    r.pass = std::abs(r.lhs - r.rhs) <= 2.0 * h;
    r.dim = n;
    r.points = N;
    r.halfwidth = L;
    rows.push_back(make_row("maximal-suite:centered-indicator-at-2", std::move(r),
                            watch.lap()));

    const GridFunction mu = maximal_uncentered(f);
    CheckReport r2;
    r2.check = "uncentered-point-value";
    r2.lhs = mu[at];
    r2.rhs = 1.0 / 3.0;
    r2.ratio = r2.lhs / r2.rhs;
    r2.pass = std::abs(r2.lhs - r2.rhs) <= 2.0 * h;
    r2.dim = n;
    r2.points = N;
    r2.halfwidth = L;
    rows.push_back(make_row("maximal-suite:uncentered-indicator-at-2",
                            std::move(r2), watch.lap()));
  }

  {  // weak (1,1) constant of the centered operator on the indicator
    const auto alphas = default_levels();
    auto weak_at = [&](const GridSpec& g) {
      const GridFunction f = sample(g, [](const std::array<double, 3>& x) {
        return x[0] >= 0.0 && x[0] <= 1.0 ? 1.0 : 0.0;
      });
      return weak_type_constant(maximal_centered(f), f, alphas);
    };
    Stopwatch watch;
    const double a1 = weak_at(spec);
    const double t1 = watch.lap();
    const double a2 = weak_at(spec2);
    const double t2 = watch.lap();

    CheckReport r;
    r.check = "weak-type";
    r.lhs = a1;
    r.pass = std::isfinite(a1) && a1 > 0.0;
    r.dim = n;
    r.points = N;
    r.halfwidth = L;
    rows.push_back(make_row("maximal-suite:weak11:N=" + std::to_string(N),
                            std::move(r), t1));
    CheckReport r2;
    r2.check = "weak-type";
    r2.lhs = a2;
    r2.pass = std::isfinite(a2) && a2 > 0.0;
    r2.dim = n;
    r2.points = 2 * N;
    r2.halfwidth = L;
    rows.push_back(make_row("maximal-suite:weak11:N=" + std::to_string(2 * N),
                            std::move(r2), t2));
    CheckReport stab;
    stab.check = "weak-type-stability";
    stab.lhs = a1;
    stab.rhs = a2;
    stab.ratio = std::max(a1, a2) / std::min(a1, a2);
    stab.pass = stab.ratio <= 1.0 + stability_tol;
    stab.dim = n;
    stab.halfwidth = L;
    rows.push_back(make_row("maximal-suite:weak11-stability", std::move(stab), 0.0));
  }

  for (const auto& tf : family) {  // strong (p,p) ratios and corollary operator
    Stopwatch watch;
    const GridFunction f1 = tf.sample(spec);
    const GridFunction f2 = tf.sample(spec2);
    const double s1 = strong_type_ratio(f1, p, mode);
    const double s2 = strong_type_ratio(f2, p, mode);

    const double pc = p / (p - 1.0);
    auto corollary_ratio = [&](const GridFunction& f) {
      return lp_norm(power_maximal(f, cor_q, mode), pc) / lp_norm(f, pc);
    };
    const double c1 = corollary_ratio(f1);
    const double c2 = corollary_ratio(f2);
    const double elapsed = watch.lap() / 6.0;

    auto push = [&](const std::string& label, const char* check, double value,
                    int points, bool pass, double rhs_value) {
      CheckReport r;
      r.check = check;
      r.lhs = value;
      r.rhs = rhs_value;
      r.ratio = std::isnan(rhs_value)
                    ? value
                    : std::max(value, rhs_value) / std::min(value, rhs_value);
      r.pass = pass;
      r.dim = n;
      r.p = p;
      r.points = points;
      r.halfwidth = L;
      rows.push_back(make_row(label, std::move(r), elapsed));
    };
    const double nan = std::numeric_limits<double>::quiet_NaN();
    push("maximal-suite:strong:" + tf.name + ":N=" + std::to_string(N),
         "strong-type", s1, N, std::isfinite(s1) && s1 >= 1.0 - 10.0 * h, nan);
    push("maximal-suite:strong:" + tf.name + ":N=" + std::to_string(2 * N),
         "strong-type", s2, 2 * N, std::isfinite(s2) && s2 >= 1.0 - 10.0 * h, nan);
    push("maximal-suite:strong-stability:" + tf.name, "strong-type-stability", s1,
         0, std::max(s1, s2) / std::min(s1, s2) <= 1.0 + stability_tol, s2);
    push("maximal-suite:corollary:" + tf.name + ":N=" + std::to_string(N),
         "corollary-ratio", c1, N, std::isfinite(c1) && c1 > 0.0, nan);
    push("maximal-suite:corollary:" + tf.name + ":N=" + std::to_string(2 * N),
         "corollary-ratio", c2, 2 * N, std::isfinite(c2) && c2 > 0.0, nan);
    push("maximal-suite:corollary-stability:" + tf.name, "corollary-stability",
         c1, 0, std::max(c1, c2) / std::min(c1, c2) <= 1.0 + stability_tol, c2);
  }
  return rows;
}

std::vector<ReportRow> run_proof_steps(const RunConfig& cfg) {
  const int n = cfg.get_int("n", 1);
  const double p = cfg.get_double("p", 2.0);
  const double s = cfg.get_double("s", 0.3);
  const double q = cfg.get_double("q", 2.0);
  const double L = cfg.get_double("L", 8.0);
  const int N = cfg.get_int("N", 1024);
  const int N_small = cfg.get_int("N-small", 64);
  const int pairs = cfg.get_int("pairs", 10);
  const SplitConfig split = SplitConfig::make(cfg.get_double("kappa", 100.0));
  const double tol_partition = cfg.get_double("tol-partition", 1e-12);
  const double tol_duality = cfg.get_double("tol-duality", 1e-10);
  const double stability_tol = cfg.get_double("proof-stability-tol", 0.15);
  const Exponents exps = Exponents::make(n, p, s);  // validates s*p < n
  (void)exps;

  std::vector<ReportRow> rows;
  const GridSpec small = GridSpec::make(n, N_small, L);

  {  // partition defect over seeded inputs
    Stopwatch watch;
    double worst = 0.0;
    for (int k = 0; k < pairs; ++k) {
      const GridFunction f =
          random_bandlimited(100 + static_cast<std::uint64_t>(k)).sample(small);
      const SplitParts parts = split_operator(f, s, split);
      const GridFunction whole = weighted_kernel_apply(f, s);
      for (std::size_t i = 0; i < whole.size(); ++i) {
        const double sum = parts.near[i] + parts.far[i];
        const double scale = std::max(std::abs(whole[i]), 1e-300);
        worst = std::max(worst, std::abs(sum - whole[i]) / scale);
      }
    }
    CheckReport r;
    r.check = "partition-identity";
    r.lhs = worst;
    r.rhs = tol_partition;
    r.pass = worst <= tol_partition;
    r.dim = n;
    r.s = s;
    r.kappa = split.kappa;
    r.points = N_small;
    r.halfwidth = L;
    rows.push_back(make_row("proof-steps:partition", std::move(r), watch.lap()));
  }

  {  // duality defect over seeded pairs
    Stopwatch watch;
    double worst = 0.0;
    for (int k = 0; k < pairs; ++k) {
      const GridFunction f =
          random_bandlimited(200 + static_cast<std::uint64_t>(k)).sample(small);
      const GridFunction g =
          random_bandlimited(300 + static_cast<std::uint64_t>(k)).sample(small);
      worst = std::max(worst, duality_check(f, g, s, split));
    }
    CheckReport r;
    r.check = "duality-identity";
    r.lhs = worst;
    r.rhs = tol_duality;
    r.pass = worst <= tol_duality;
    r.dim = n;
    r.s = s;
    r.kappa = split.kappa;
    r.points = N_small;
    r.halfwidth = L;
    rows.push_back(make_row("proof-steps:duality", std::move(r), watch.lap()));
  }

  {  // far part is dominated by the majorant for nonnegative inputs
    Stopwatch watch;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::vector<GridFunction> inputs;
    inputs.push_back(gaussian().sample(small));
    inputs.push_back(bump().sample(small));
    inputs.push_back(plateau().sample(small));
    for (int k = 0; k < pairs; ++k)
      inputs.push_back(
          abs(random_bandlimited(400 + static_cast<std::uint64_t>(k)).sample(small)));
    for (const auto& f : inputs) {
      const SplitParts parts = split_operator(f, s, split);
      const GridFunction b2 = b2_majorant(f, s, split);
      for (std::size_t i = 0; i < f.size(); ++i)
        worst_margin = std::min(worst_margin, b2[i] - parts.far[i]);
    }
    CheckReport r;
    r.check = "majorant-domination";
    r.lhs = worst_margin;
    r.rhs = 0.0;
    r.pass = worst_margin >= -1e-12;
    r.dim = n;
    r.s = s;
    r.kappa = split.kappa;
    r.points = N_small;
    r.halfwidth = L;
    rows.push_back(make_row("proof-steps:majorization", std::move(r), watch.lap()));
  }

  const GridSpec coarse = GridSpec::make(n, N, L);
  const GridSpec fine = GridSpec::make(n, 2 * N, L);

  {  // near part against the maximal function
    Stopwatch watch;
    const GridFunction f1 = bump().sample(coarse);
    const GridFunction f2 = bump().sample(fine);
    const double b1 = a1_maximal_bound(f1, s, split, maximal_centered(f1));
    const double t1 = watch.lap();
    const double b2 = a1_maximal_bound(f2, s, split, maximal_centered(f2));
    const double t2 = watch.lap();

    auto bound_row = [&](double value, int points, double seconds) {
      CheckReport r;
      r.check = "near-part-maximal-bound";
      r.lhs = value;
      r.constant = dyadic_sum(s);
      r.pass = std::isfinite(value) && value > 0.0;
      r.dim = n;
      r.s = s;
      r.kappa = split.kappa;
      r.points = points;
      r.halfwidth = L;
      rows.push_back(make_row("proof-steps:a1-bound:N=" + std::to_string(points),
                              std::move(r), seconds));
    };
    bound_row(b1, N, t1);
    bound_row(b2, 2 * N, t2);
    CheckReport stab;
    stab.check = "near-part-bound-stability";
    stab.lhs = b1;
    stab.rhs = b2;
    stab.ratio = std::max(b1, b2) / std::min(b1, b2);
    stab.constant = dyadic_sum(s);
    stab.pass = stab.ratio <= 1.0 + stability_tol;
    stab.dim = n;
    stab.s = s;
    stab.kappa = split.kappa;
    stab.halfwidth = L;
    rows.push_back(make_row("proof-steps:a1-stability", std::move(stab), 0.0));
  }

  {  // dual operator against the power maximal
    Stopwatch watch;
    const GridFunction g1 = bump().sample(coarse);
    const GridFunction g2 = bump().sample(fine);
    const double b1 = t_maximal_bound(g1, s, q, split);
    const double t1 = watch.lap();
    const double b2 = t_maximal_bound(g2, s, q, split);
    const double t2 = watch.lap();

    auto bound_row = [&](double value, int points, double seconds) {
      CheckReport r;
      r.check = "dual-maximal-bound";
      r.lhs = value;
      r.pass = std::isfinite(value) && value >= 0.0;
      r.dim = n;
      r.s = s;
      r.q = q;
      r.kappa = split.kappa;
      r.points = points;
      r.halfwidth = L;
      r.note = "bound evaluated at the dual variable";
      rows.push_back(make_row("proof-steps:t-bound:N=" + std::to_string(points),
                              std::move(r), seconds));
    };
    bound_row(b1, N, t1);
    bound_row(b2, 2 * N, t2);
    CheckReport stab;
    stab.check = "dual-bound-stability";
    stab.lhs = b1;
    stab.rhs = b2;
    stab.ratio = std::max(b1, b2) / std::min(b1, b2);
    stab.pass = stab.ratio <= 1.0 + stability_tol;
    stab.dim = n;
    stab.s = s;
    stab.q = q;
    stab.kappa = split.kappa;
    stab.halfwidth = L;
    rows.push_back(make_row("proof-steps:t-stability", std::move(stab), 0.0));
  }

  {  // geometric factor carried alongside the near-part bound
    CheckReport r;
    r.check = "dyadic-sum";
    r.lhs = dyadic_sum(s);
    r.pass = std::isfinite(r.lhs) && r.lhs > 0.0;
    r.s = s;
    rows.push_back(make_row("proof-steps:dyadic-sum", std::move(r), 0.0));
  }
  return rows;
}

}  // namespace

std::vector<ReportRow> run_experiment(const std::string& name, const RunConfig& cfg) {
  std::vector<ReportRow> rows;
  if (name == "verify-classical") {
    rows = run_verify_classical(cfg);
  } else if (name == "sharpness-sweep") {
    rows = run_sharpness_sweep(cfg);
  } else if (name == "verify-cazenave") {
    rows = run_verify_cazenave(cfg);
  } else if (name == "verify-fractional") {
    rows = run_verify_fractional(cfg);
  } else if (name == "endpoint-blowup") {
    rows = run_endpoint_blowup(cfg);
  } else if (name == "maximal-suite") {
    rows = run_maximal_suite(cfg);
  } else if (name == "proof-steps") {
    rows = run_proof_steps(cfg);
  } else if (name == "all") {
    for (const auto& sub : experiment_names()) {
      if (sub == "all") continue;
      auto part = run_experiment(sub, cfg);
      rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
    }
  } else {
    throw std::invalid_argument("unknown experiment '" + name + "'");
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) {
                     return a.experiment < b.experiment;
                   });
  return rows;
}

void write_csv_file(const std::string& path, std::span<const ReportRow> rows) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_csv(rows);
}

void write_json_file(const std::string& path, std::span<const ReportRow> rows,
                     const RunConfig& cfg) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(rows, cfg.entries()).dump(2) << "\n";
}

}  // namespace hardy
