#include "testfam.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "numerics.hpp"

namespace hardy {

namespace {

// e^{-1/u} extended by 0 for u <= 0; the building block of smooth cutoffs.
double decay(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }

// Smooth monotone step: 0 for u <= 0, 1 for u >= 1.
double smoothstep(double u) {
  const double a = decay(u);
  const double b = decay(1.0 - u);
  return a / (a + b);
}

double dist(const std::array<double, 3>& x, const std::array<double, 3>& c, int dim) {
  double r2 = 0.0;
  for (int d = 0; d < dim; ++d) r2 += (x[d] - c[d]) * (x[d] - c[d]);
  return std::sqrt(r2);
}

double max_abs(const std::array<double, 3>& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

// |x| where exp(-x^2/2) first drops below 1e-12.
constexpr double kGaussianTail = 7.44;

}  // namespace

GridFunction TestFunction::sample(const GridSpec& spec) const {
  if (extent > spec.halfwidth)
    throw std::invalid_argument("TestFunction '" + name +
                                "' does not fit in the grid box");
  return hardy::sample(spec, [&](const std::array<double, 3>& x) {
    return profile(x, spec);
  });
}

TestFunction gaussian(std::array<double, 3> center, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian: width must be positive");
  TestFunction f;
  f.name = "gaussian";
  f.extent = max_abs(center) + kGaussianTail * width;
  f.profile = [center, width](const std::array<double, 3>& x, const GridSpec& spec) {
    const double r = dist(x, center, spec.dim);
    return std::exp(-r * r / (2.0 * width * width));
  };
  return f;
}

TestFunction bump(std::array<double, 3> center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("bump: radius must be positive");
  TestFunction f;
  f.name = "bump";
  f.extent = max_abs(center) + radius;
  f.profile = [center, radius](const std::array<double, 3>& x, const GridSpec& spec) {
    const double t = dist(x, center, spec.dim) / radius;
    if (t >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
  };
  return f;
}

TestFunction plateau(double r_in, double r_out) {
  if (!(r_in > 0.0) || !(r_out > r_in))
    throw std::invalid_argument("plateau: need 0 < r_in < r_out");
  TestFunction f;
  f.name = "plateau";
  f.extent = r_out;
  f.profile = [r_in, r_out](const std::array<double, 3>& x, const GridSpec& spec) {
    const double r = dist(x, {0, 0, 0}, spec.dim);
    if (r <= r_in) return 1.0;
    if (r >= r_out) return 0.0;
    return smoothstep((r_out - r) / (r_out - r_in));
  };
  return f;
}

TestFunction random_bandlimited(std::uint64_t seed, int max_mode) {
  if (max_mode < 1) throw std::invalid_argument("random_bandlimited: max_mode >= 1");
  TestFunction f;
  f.name = "bandlimited:" + std::to_string(seed);
  f.extent = 0.0;  // periodic, fits any box
  f.profile = [seed, max_mode](const std::array<double, 3>& x, const GridSpec& spec) {
    // Lexicographically positive modes k with |k|_inf <= max_mode. The
    // coefficient stream depends only on (seed, dim, max_mode), so the
    // same continuum function is sampled at every refinement level.
    SplitMix64 rng(seed);
    const int m = max_mode;
    double value = 0.0;
    auto emit = [&](int k0, int k1, int k2) {
      const double a = rng.symmetric();
      const double b = rng.symmetric();
      const double ksq = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
      const double phase = std::numbers::pi_v<double> *
                           (k0 * x[0] + k1 * x[1] + k2 * x[2]) / spec.halfwidth;
      value += (a * std::cos(phase) + b * std::sin(phase)) / (1.0 + ksq);
    };
    if (spec.dim == 1) {
      for (int k0 = 1; k0 <= m; ++k0) emit(k0, 0, 0);
    } else if (spec.dim == 2) {
      for (int k0 = 0; k0 <= m; ++k0)
        for (int k1 = -m; k1 <= m; ++k1) {
          if (k0 == 0 && k1 <= 0) continue;
          emit(k0, k1, 0);
        }
    } else {
      for (int k0 = 0; k0 <= m; ++k0)
        for (int k1 = -m; k1 <= m; ++k1)
          for (int k2 = -m; k2 <= m; ++k2) {
            if (k0 == 0 && (k1 < 0 || (k1 == 0 && k2 <= 0))) continue;
            emit(k0, k1, k2);
          }
    }
    return value;
  };
  return f;
}

double power_cutoff(double x, double p, double T) {
  if (!(p > 1.0) || !(T > 1.0))
    throw std::invalid_argument("power_cutoff: need p > 1 and T > 1");
  if (x < 1.0 || x > T) return 0.0;
  return std::pow(x, -1.0 / p);
}

}  // namespace hardy
