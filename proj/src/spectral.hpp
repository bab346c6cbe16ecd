#pragma once

#include <array>
#include <complex>
#include <vector>

#include "grid.hpp"

namespace hardy {

/// Fourier coefficients of a GridFunction on the periodic box [-L, L]^n.
/// Coefficient k (integer frequencies in [-N/2, N/2) per axis) multiplies
/// e^{i xi_k . x} with physical frequency xi_k = pi*k/L. Normalised so
/// that synthesize(analyze(f)) == f up to rounding.
class Spectrum {
 public:
  static Spectrum analyze(const GridFunction& f);

  /// Inverse transform. The result must be real: the call throws if the
  /// largest imaginary residue exceeds imag_tol * max(1, max|Re|).
  GridFunction synthesize(double imag_tol = 1e-10) const;

  const GridSpec& spec() const { return spec_; }
  std::size_t size() const { return coeff_.size(); }

  std::complex<double>& operator[](std::size_t i) { return coeff_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return coeff_[i]; }

  /// Signed integer mode numbers of flat index i, one per axis.
  std::array<int, 3> modes(std::size_t i) const;
  /// Physical frequency vector xi = pi*k/L of flat index i.
  std::array<double, 3> frequency(std::size_t i) const;
  double frequency_norm(std::size_t i) const;
  bool is_zero_mode(std::size_t i) const;
  /// True when any axis carries the unpaired Nyquist mode -N/2.
  bool has_nyquist(std::size_t i) const;

 private:
  Spectrum(GridSpec spec, std::vector<std::complex<double>> coeff)
      : spec_(spec), coeff_(std::move(coeff)) {}

  GridSpec spec_;
  std::vector<std::complex<double>> coeff_;
};

/// (-Delta)^{s/2}: multiplier |xi|^s, zero frequency mapped to 0.
GridFunction frac_laplacian(const GridFunction& f, double s);

/// Riesz potential: multiplier |xi|^{-alpha} on the zero-mean part of f
/// (the zero mode is projected out). Requires 0 < alpha < n.
GridFunction riesz_potential(const GridFunction& f, double alpha);

/// Direct quadrature of the Riesz kernel c_{n,alpha}|x-y|^{alpha-n} over
/// the box, with the singular diagonal cell replaced by its analytic
/// integral over an equal-volume ball. O(N^{2n}); grids above the cost
/// cap are rejected.
GridFunction riesz_kernel_convolution(const GridFunction& f, double alpha);

/// Standard normalisation c_{n,alpha} that makes the kernel the inverse
/// of (-Delta)^{alpha/2} on the whole space.
double riesz_constant(int dim, double alpha);

/// Spectral partial derivatives, one per axis. Nyquist rows are zeroed
/// to keep the output real.
std::vector<GridFunction> gradient(const GridFunction& f);

/// Pointwise Euclidean length of the gradient.
GridFunction gradient_magnitude(const GridFunction& f);

/// Homogeneous Sobolev norm ||(-Delta)^{s/2} f||_p.
double sobolev_norm(const GridFunction& f, double s, double p);

/// Largest node count N^n accepted by the O(N^{2n}) direct-quadrature
/// operators (4096 in 1-D, 128 per axis in 2-D, 24 in 3-D).
std::size_t dense_op_node_cap();
void require_dense_op_size(const GridSpec& spec, const char* op);

/// Analytic integral of |z|^{c-n} over the ball with volume h^n,
/// used for the singular diagonal cell of the direct kernels.
double diagonal_cell_integral(const GridSpec& spec, double c);

}  // namespace hardy
