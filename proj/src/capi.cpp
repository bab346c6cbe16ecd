#include "hardycheck/hardycheck.h"

#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>

#include "grid.hpp"
#include "maximal.hpp"
#include "runner.hpp"
#include "spectral.hpp"
#include "testfam.hpp"

namespace {

thread_local std::string g_last_error;

hc_status fail(hc_status code, const char* what) {
  g_last_error = what;
  return code;
}

hc_status guard_result(const std::exception& e) {
  g_last_error = e.what();
  if (dynamic_cast<const std::invalid_argument*>(&e))
    return HC_ERROR_INVALID_ARGUMENT;
  return HC_ERROR_RUNTIME;
}

template <class Fn>
hc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return guard_result(e);
  } catch (...) {
    return fail(HC_ERROR_RUNTIME, "unknown error");
  }
}

hardy::TestFunction parse_generator(const std::string& name) {
  if (name == "gaussian") return hardy::gaussian();
  if (name == "bump") return hardy::bump();
  if (name == "plateau") return hardy::plateau();
  if (name.rfind("bandlimited:", 0) == 0)
    return hardy::random_bandlimited(
        std::stoull(name.substr(std::string("bandlimited:").size())));
  throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace

struct hc_field {
  hardy::GridFunction fn;
};

struct hc_run {
  hardy::RunConfig config;
  std::vector<hardy::ReportRow> rows;
  std::string summary;
};

extern "C" {

const char* hc_last_error(void) { return g_last_error.c_str(); }

const char* hc_version(void) { return "0.1.0"; }

hc_status hc_field_create(int dim, int points, double halfwidth,
                          const double* values, hc_field** out) {
  if (!out) return fail(HC_ERROR_INVALID_ARGUMENT, "out must not be null");
  return guarded([&]() {
    const auto spec = hardy::GridSpec::make(dim, points, halfwidth);
    if (values) {
      std::vector<double> v(values, values + spec.size());
      *out = new hc_field{hardy::GridFunction(spec, std::move(v))};
    } else {
      *out = new hc_field{hardy::GridFunction(spec)};
    }
    return HC_OK;
  });
}

hc_status hc_field_generate(int dim, int points, double halfwidth,
                            const char* generator, hc_field** out) {
  if (!out || !generator)
    return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    const auto spec = hardy::GridSpec::make(dim, points, halfwidth);
    *out = new hc_field{parse_generator(generator).sample(spec)};
    return HC_OK;
  });
}

int64_t hc_field_size(const hc_field* f) {
  return f ? static_cast<int64_t>(f->fn.size()) : 0;
}

hc_status hc_field_values(const hc_field* f, double* out) {
  if (!f || !out) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  const auto v = f->fn.values();
  std::memcpy(out, v.data(), v.size() * sizeof(double));
  return HC_OK;
}

void hc_field_destroy(hc_field* f) { delete f; }

hc_status hc_frac_laplacian(const hc_field* f, double s, hc_field** out) {
  if (!f || !out) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    *out = new hc_field{hardy::frac_laplacian(f->fn, s)};
    return HC_OK;
  });
}

hc_status hc_riesz_potential(const hc_field* f, double alpha, hc_field** out) {
  if (!f || !out) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    *out = new hc_field{hardy::riesz_potential(f->fn, alpha)};
    return HC_OK;
  });
}

hc_status hc_riesz_convolution(const hc_field* f, double alpha, hc_field** out) {
  if (!f || !out) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    *out = new hc_field{hardy::riesz_kernel_convolution(f->fn, alpha)};
    return HC_OK;
  });
}

hc_status hc_maximal(const hc_field* f, int uncentered, hc_field** out) {
  if (!f || !out) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    const hardy::MaximalConfig cfg{uncentered ? hardy::MaximalMode::uncentered
                                              : hardy::MaximalMode::centered};
    *out = new hc_field{hardy::maximal(f->fn, cfg)};
    return HC_OK;
  });
}

hc_status hc_lp_norm(const hc_field* f, double p, double* out) {
  if (!f || !out) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    *out = hardy::lp_norm(f->fn, p);
    return HC_OK;
  });
}

hc_status hc_sobolev_norm(const hc_field* f, double s, double p, double* out) {
  if (!f || !out) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    *out = hardy::sobolev_norm(f->fn, s, p);
    return HC_OK;
  });
}

hc_status hc_weighted_integral(const hc_field* f, double p, double a,
                               double inner_cutoff, double* out) {
  if (!f || !out) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    *out = hardy::weighted_integral(f->fn, p, a, inner_cutoff);
    return HC_OK;
  });
}

hc_status hc_run_create(hc_run** out) {
  if (!out) return fail(HC_ERROR_INVALID_ARGUMENT, "out must not be null");
  *out = new hc_run{};
  return HC_OK;
}

void hc_run_destroy(hc_run* run) { delete run; }

hc_status hc_run_set(hc_run* run, const char* key, const char* value) {
  if (!run || !key || !value) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    run->config.set(key, value);
    return HC_OK;
  });
}

hc_status hc_run_load_config(hc_run* run, const char* path) {
  if (!run || !path) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    const auto file = hardy::RunConfig::from_file(path);
    for (const auto& [key, value] : file.entries()) {
      if (!run->config.get(key)) run->config.set(key, value);
    }
    return HC_OK;
  });
}

const char* hc_experiments(void) {
  static const std::string joined = [] {
    std::string s;
    for (const auto& name : hardy::experiment_names()) {
      if (!s.empty()) s += ',';
      s += name;
    }
    return s;
  }();
  return joined.c_str();
}

hc_status hc_run_execute(hc_run* run, const char* experiment) {
  if (!run || !experiment) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() {
    run->rows = hardy::run_experiment(experiment, run->config);
    return HC_OK;
  });
}

int hc_run_row_count(const hc_run* run) {
  return run ? static_cast<int>(run->rows.size()) : 0;
}

hc_status hc_run_row_value(const hc_run* run, int row, const char* field,
                           double* out) {
  if (!run || !field || !out) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  if (row < 0 || row >= static_cast<int>(run->rows.size()))
    return fail(HC_ERROR_INVALID_ARGUMENT, "row index out of range");
  const auto& r = run->rows[static_cast<std::size_t>(row)];
  const std::string name(field);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (name == "n") *out = r.report.dim == 0 ? nan : r.report.dim;
  else if (name == "p") *out = r.report.p;
  else if (name == "s") *out = r.report.s;
  else if (name == "q") *out = r.report.q;
  else if (name == "kappa") *out = r.report.kappa;
  else if (name == "N") *out = r.report.points == 0 ? nan : r.report.points;
  else if (name == "L") *out = r.report.halfwidth;
  else if (name == "lhs") *out = r.report.lhs;
  else if (name == "rhs") *out = r.report.rhs;
  else if (name == "ratio") *out = r.report.ratio;
  else if (name == "pass") *out = r.report.pass ? 1.0 : 0.0;
  else if (name == "seconds") *out = r.seconds;
  else return fail(HC_ERROR_INVALID_ARGUMENT, "unknown row field");
  return HC_OK;
}

hc_status hc_run_row_experiment(const hc_run* run, int row, const char** out) {
  if (!run || !out) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  if (row < 0 || row >= static_cast<int>(run->rows.size()))
    return fail(HC_ERROR_INVALID_ARGUMENT, "row index out of range");
  *out = run->rows[static_cast<std::size_t>(row)].experiment.c_str();
  return HC_OK;
}

int hc_run_all_passed(const hc_run* run) {
  if (!run) return 0;
  for (const auto& row : run->rows)
    if (!row.report.pass) return 0;
  return 1;
}

hc_status hc_run_write_csv(const hc_run* run, const char* path) {
  if (!run || !path) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  try {
    hardy::write_csv_file(path, run->rows);
    return HC_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return HC_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HC_ERROR_IO;
  }
}

hc_status hc_run_write_json(const hc_run* run, const char* path) {
  if (!run || !path) return fail(HC_ERROR_INVALID_ARGUMENT, "null argument");
  try {
    hardy::write_json_file(path, run->rows, run->config);
    return HC_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return HC_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HC_ERROR_IO;
  }
}

const char* hc_run_summary(hc_run* run) {
  if (!run) return "";
  run->summary = hardy::summary_table(run->rows);
  return run->summary.c_str();
}

}  // extern "C"
