#include "grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "numerics.hpp"

namespace hardy {

GridSpec GridSpec::make(int dim, int points, double halfwidth) {
  if (dim < 1 || dim > 3)
    throw std::invalid_argument("GridSpec: dim must be 1, 2 or 3");
  if (points < 8 || points % 2 != 0)
    throw std::invalid_argument("GridSpec: points must be even and >= 8");
  if (!(halfwidth > 0.0) || !std::isfinite(halfwidth))
    throw std::invalid_argument("GridSpec: halfwidth must be positive");
  return GridSpec{dim, points, halfwidth};
}

std::size_t GridSpec::size() const {
  std::size_t n = 1;
  for (int d = 0; d < dim; ++d) n *= static_cast<std::size_t>(points);
  return n;
}

double GridSpec::cell_measure() const {
  double m = 1.0;
  for (int d = 0; d < dim; ++d) m *= spacing();
  return m;
}

double GridSpec::min_radius() const {
  return 0.5 * spacing() * std::sqrt(static_cast<double>(dim));
}

std::array<int, 3> GridSpec::unpack(std::size_t idx) const {
  std::array<int, 3> k{0, 0, 0};
  for (int d = dim - 1; d >= 0; --d) {
    k[d] = static_cast<int>(idx % static_cast<std::size_t>(points));
    idx /= static_cast<std::size_t>(points);
  }
  return k;
}

std::array<double, 3> GridSpec::point(std::size_t idx) const {
  const auto k = unpack(idx);
  std::array<double, 3> x{0.0, 0.0, 0.0};
  for (int d = 0; d < dim; ++d) x[d] = coord(k[d]);
  return x;
}

double GridSpec::radius(std::size_t idx) const {
  const auto x = point(idx);
  double r2 = 0.0;
  for (int d = 0; d < dim; ++d) r2 += x[d] * x[d];
  return std::sqrt(r2);
}

GridFunction::GridFunction(GridSpec spec)
    : spec_(spec), values_(spec.size(), 0.0) {}

GridFunction::GridFunction(GridSpec spec, std::vector<double> values)
    : spec_(spec), values_(std::move(values)) {
  if (values_.size() != spec_.size())
    throw std::invalid_argument("GridFunction: value count does not match grid");
}

double GridFunction::mean() const {
  return compensated_sum(values_.size(), [&](std::size_t i) { return values_[i]; }) /
         static_cast<double>(values_.size());
}

bool GridFunction::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

static void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (!(a.spec() == b.spec()))
    throw std::invalid_argument("grid mismatch between operands");
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  GridFunction out(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  GridFunction out(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

GridFunction operator*(double c, const GridFunction& f) {
  GridFunction out(f.spec());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = c * f[i];
  return out;
}

GridFunction abs(const GridFunction& f) {
  GridFunction out(f.spec());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  return out;
}

double integrate(const GridFunction& f) {
  const auto v = f.values();
  const double s = compensated_sum(v.size(), [&](std::size_t i) { return v[i]; });
  return f.spec().cell_measure() * s;
}

static double abs_pow(double v, double p) {
  if (p == 1.0) return std::abs(v);
  if (p == 2.0) return v * v;
  return std::pow(std::abs(v), p);
}

double integrate_abs_pow(const GridFunction& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("integrate_abs_pow: p must be >= 1");
  const auto v = f.values();
  const double s =
      compensated_sum(v.size(), [&](std::size_t i) { return abs_pow(v[i], p); });
  return f.spec().cell_measure() * s;
}

double weighted_integral(const GridFunction& f, double p, double a,
                         double inner_cutoff, bool allow_divergent) {
  if (!(p >= 1.0)) throw std::invalid_argument("weighted_integral: p must be >= 1");
  if (inner_cutoff < 0.0)
    throw std::invalid_argument("weighted_integral: inner_cutoff must be >= 0");
  if (a >= f.spec().dim && inner_cutoff == 0.0 && !allow_divergent)
    throw std::invalid_argument(
        "weighted_integral: a >= n with no inner cutoff approximates a "
        "divergent integral (pass allow_divergent to force)");

  const auto& spec = f.spec();
  const auto v = f.values();
  const double s = compensated_sum(v.size(), [&](std::size_t i) {
    const double r = spec.radius(i);
    if (r <= inner_cutoff) return 0.0;
    return abs_pow(v[i], p) * std::pow(r, -a);
  });
  return spec.cell_measure() * s;
}

double lp_norm(const GridFunction& f, double p) {
  return std::pow(integrate_abs_pow(f, p), 1.0 / p);
}

HalfLineGrid HalfLineGrid::uniform(double x_max, int cells) {
  if (!(x_max > 0.0) || cells < 2)
    throw std::invalid_argument("HalfLineGrid::uniform: bad parameters");
  HalfLineGrid g;
  g.node.resize(cells);
  g.weight.resize(cells);
  g.left.resize(cells);
  const double h = x_max / cells;
  for (int k = 0; k < cells; ++k) {
    g.left[k] = k * h;
    g.node[k] = (k + 0.5) * h;
    g.weight[k] = h;
  }
  return g;
}

HalfLineGrid HalfLineGrid::geometric(double x_min, double x_max, int cells) {
  if (!(x_min > 0.0) || !(x_max > x_min) || cells < 2)
    throw std::invalid_argument("HalfLineGrid::geometric: bad parameters");
  HalfLineGrid g;
  g.node.resize(cells);
  g.weight.resize(cells);
  g.left.resize(cells);
  const double rho = std::log(x_max / x_min) / cells;
  double lo = x_min;
  for (int k = 0; k < cells; ++k) {
    const double hi = x_min * std::exp(rho * (k + 1));
    g.left[k] = lo;
    g.node[k] = std::sqrt(lo * hi);
    g.weight[k] = hi - lo;
    lo = hi;
  }
  return g;
}

}  // namespace hardy
