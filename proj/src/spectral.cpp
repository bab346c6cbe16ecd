#include "spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "numerics.hpp"

namespace hardy {

namespace {

// FFTW plan creation is not thread safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place c2c transform along all axes. sign = FFTW_FORWARD or
// FFTW_BACKWARD, unnormalised.
void fft_inplace(const GridSpec& spec, std::complex<double>* data, int sign) {
  int dims[3] = {spec.points, spec.points, spec.points};
  fftw_plan plan = nullptr;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft(spec.dim, dims,
                         reinterpret_cast<fftw_complex*>(data),
                         reinterpret_cast<fftw_complex*>(data), sign,
                         FFTW_ESTIMATE);
  }
  if (!plan) throw std::runtime_error("fftw plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
}

int signed_mode(int index, int points) {
  return index < points / 2 ? index : index - points;
}

}  // namespace

Spectrum Spectrum::analyze(const GridFunction& f) {
  const GridSpec& spec = f.spec();
  std::vector<std::complex<double>> buf(f.size());
  const auto v = f.values();
  for (std::size_t i = 0; i < v.size(); ++i) buf[i] = v[i];
  fft_inplace(spec, buf.data(), FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(spec.size());
  for (auto& c : buf) c *= scale;
  return Spectrum(spec, std::move(buf));
}

GridFunction Spectrum::synthesize(double imag_tol) const {
  std::vector<std::complex<double>> buf = coeff_;
  fft_inplace(spec_, buf.data(), FFTW_BACKWARD);
  double max_re = 1.0, max_im = 0.0;
  for (const auto& c : buf) {
    max_re = std::max(max_re, std::abs(c.real()));
    max_im = std::max(max_im, std::abs(c.imag()));
  }
  if (max_im > imag_tol * max_re)
    throw std::runtime_error(
        "synthesize: non-real result (asymmetric spectrum); imaginary "
        "residue " + std::to_string(max_im));
  GridFunction out(spec_);
  auto v = out.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = buf[i].real();
  return out;
}

std::array<int, 3> Spectrum::modes(std::size_t i) const {
  const auto k = spec_.unpack(i);
  std::array<int, 3> out{0, 0, 0};
  for (int d = 0; d < spec_.dim; ++d) out[d] = signed_mode(k[d], spec_.points);
  return out;
}

std::array<double, 3> Spectrum::frequency(std::size_t i) const {
  const auto k = modes(i);
  std::array<double, 3> xi{0.0, 0.0, 0.0};
  const double base = std::numbers::pi_v<double> / spec_.halfwidth;
  for (int d = 0; d < spec_.dim; ++d) xi[d] = base * k[d];
  return xi;
}

double Spectrum::frequency_norm(std::size_t i) const {
  const auto xi = frequency(i);
  double sq = 0.0;
  for (int d = 0; d < spec_.dim; ++d) sq += xi[d] * xi[d];
  return std::sqrt(sq);
}

bool Spectrum::is_zero_mode(std::size_t i) const {
  const auto k = modes(i);
  for (int d = 0; d < spec_.dim; ++d)
    if (k[d] != 0) return false;
  return true;
}

bool Spectrum::has_nyquist(std::size_t i) const {
  const auto k = modes(i);
  for (int d = 0; d < spec_.dim; ++d)
    if (k[d] == -spec_.points / 2) return true;
  return false;
}

GridFunction frac_laplacian(const GridFunction& f, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("frac_laplacian: s must be >= 0");
  Spectrum spec = Spectrum::analyze(f);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec.is_zero_mode(i)) {
      spec[i] = 0.0;
    } else if (s != 0.0) {
      spec[i] *= std::pow(spec.frequency_norm(i), s);
    }
  }
  return spec.synthesize();
}

GridFunction riesz_potential(const GridFunction& f, double alpha) {
  if (!(alpha > 0.0) || !(alpha < f.spec().dim))
    throw std::invalid_argument("riesz_potential: need 0 < alpha < n");
  Spectrum spec = Spectrum::analyze(f);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec.is_zero_mode(i)) {
      spec[i] = 0.0;  // zero-mean projection
    } else {
      spec[i] *= std::pow(spec.frequency_norm(i), -alpha);
    }
  }
  return spec.synthesize();
}

double riesz_constant(int dim, double alpha) {
  if (!(alpha > 0.0) || !(alpha < dim))
    throw std::invalid_argument("riesz_constant: need 0 < alpha < n");
  const double n = dim;
  return std::tgamma((n - alpha) / 2.0) /
         (std::pow(2.0, alpha) * std::pow(std::numbers::pi_v<double>, n / 2.0) *
          std::tgamma(alpha / 2.0));
}

std::size_t dense_op_node_cap() { return 16384; }

void require_dense_op_size(const GridSpec& spec, const char* op) {
  if (spec.size() > dense_op_node_cap())
    throw std::invalid_argument(std::string(op) +
                                ": grid exceeds the O(N^2n) cost cap");
}

double diagonal_cell_integral(const GridSpec& spec, double c) {
  const double h = spec.spacing();
  // Surface area of the unit sphere and radius of the ball with volume h^n.
  double surface, r_eq;
  const double pi = std::numbers::pi_v<double>;
  switch (spec.dim) {
    case 1: surface = 2.0; r_eq = h / 2.0; break;
    case 2: surface = 2.0 * pi; r_eq = h / std::sqrt(pi); break;
    default: surface = 4.0 * pi; r_eq = h * std::cbrt(3.0 / (4.0 * pi)); break;
  }
  // integral of |z|^{c-n} over that ball
  return surface * std::pow(r_eq, c) / c;
}

GridFunction riesz_kernel_convolution(const GridFunction& f, double alpha) {
  const GridSpec& spec = f.spec();
  if (!(alpha > 0.0) || !(alpha < spec.dim))
    throw std::invalid_argument("riesz_kernel_convolution: need 0 < alpha < n");
  require_dense_op_size(spec, "riesz_kernel_convolution");

  const double c = riesz_constant(spec.dim, alpha);
  const double cell = spec.cell_measure();
  const double diag = diagonal_cell_integral(spec, alpha);
  const std::size_t n = spec.size();

  std::vector<std::array<double, 3>> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = spec.point(i);

  GridFunction out(spec);
  const auto v = f.values();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& xi = pts[i];
    const double row = compensated_sum(n, [&](std::size_t j) {
      if (j == i) return 0.0;
      const auto& yj = pts[j];
      double d2 = 0.0;
      for (int d = 0; d < spec.dim; ++d) d2 += (xi[d] - yj[d]) * (xi[d] - yj[d]);
      return v[j] * std::pow(d2, 0.5 * (alpha - spec.dim));
    });
    out[i] = c * (row * cell + diag * v[i]);
  }
  return out;
}

std::vector<GridFunction> gradient(const GridFunction& f) {
  const GridSpec& gspec = f.spec();
  std::vector<GridFunction> out;
  out.reserve(gspec.dim);
  const Spectrum base = Spectrum::analyze(f);
  for (int axis = 0; axis < gspec.dim; ++axis) {
    Spectrum spec = base;
    for (std::size_t i = 0; i < spec.size(); ++i) {
      const auto k = spec.modes(i);
      if (k[axis] == -gspec.points / 2) {
        spec[i] = 0.0;  // unpaired Nyquist mode would break realness
      } else {
        const auto xi = spec.frequency(i);
        spec[i] *= std::complex<double>(0.0, xi[axis]);
      }
    }
    out.push_back(spec.synthesize());
  }
  return out;
}

GridFunction gradient_magnitude(const GridFunction& f) {
  const auto parts = gradient(f);
  GridFunction out(f.spec());
  for (std::size_t i = 0; i < out.size(); ++i) {
    double sq = 0.0;
    for (const auto& g : parts) sq += g[i] * g[i];
    out[i] = std::sqrt(sq);
  }
  return out;
}

double sobolev_norm(const GridFunction& f, double s, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("sobolev_norm: p must be >= 1");
  return lp_norm(frac_laplacian(f, s), p);
}

}  // namespace hardy
