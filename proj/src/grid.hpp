#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace hardy {

/// Cell-centered uniform grid on the cube [-L, L]^n, n in {1,2,3}.
/// Node coordinates are (k + 1/2)h - L with h = 2L/N, so no node ever
/// lands on the origin; the nearest node to 0 sits at distance
/// (h/2)*sqrt(n) (corner cell in n dimensions).
struct GridSpec {
  int dim = 1;             // n
  int points = 0;          // N per axis, even, >= 8
  double halfwidth = 0.0;  // L

  static GridSpec make(int dim, int points, double halfwidth);

  double spacing() const { return 2.0 * halfwidth / points; }
  std::size_t size() const;
  double cell_measure() const;  // h^n
  double min_radius() const;    // (h/2)*sqrt(n)

  double coord(int k) const { return (k + 0.5) * spacing() - halfwidth; }
  std::array<int, 3> unpack(std::size_t idx) const;
  std::array<double, 3> point(std::size_t idx) const;
  double radius(std::size_t idx) const;  // |x| at node idx

  bool operator==(const GridSpec&) const = default;
};

/// Real-valued samples on a GridSpec, row-major in axis order.
class GridFunction {
 public:
  explicit GridFunction(GridSpec spec);
  GridFunction(GridSpec spec, std::vector<double> values);

  const GridSpec& spec() const { return spec_; }
  std::size_t size() const { return values_.size(); }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  double mean() const;
  bool all_finite() const;

 private:
  GridSpec spec_;
  std::vector<double> values_;
};

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double c, const GridFunction& f);
GridFunction abs(const GridFunction& f);

/// Samples fn(x) at every node; fn receives the node coordinates with
/// unused axes set to zero.
template <class F>
GridFunction sample(const GridSpec& spec, F&& fn) {
  GridFunction g(spec);
  const std::size_t n = spec.size();
  auto v = g.values();
  for (std::size_t i = 0; i < n; ++i) v[i] = fn(spec.point(i));
  return g;
}

/// Midpoint rule: h^n * sum of values. Exact for grid constants.
double integrate(const GridFunction& f);

/// h^n * sum |f|^p (no root). Shared by lp_norm and the weighted checks.
double integrate_abs_pow(const GridFunction& f, double p);

/// h^n * sum over |x| > inner_cutoff of |f(x)|^p / |x|^a.
/// With inner_cutoff = 0 the staggering keeps every term finite, but
/// a >= n is rejected unless allow_divergent is set (the integral it
/// approximates diverges); with a positive cutoff any a is meaningful.
double weighted_integral(const GridFunction& f, double p, double a,
                         double inner_cutoff = 0.0,
                         bool allow_divergent = false);

double lp_norm(const GridFunction& f, double p);

/// Cell-centered 1-D grid on (0, x_max], uniform or geometric spacing.
/// Geometric cells use the geometric mean of the cell edges as the node,
/// which keeps the midpoint rule second order in log space.
struct HalfLineGrid {
  std::vector<double> node;    // cell centers
  std::vector<double> weight;  // cell widths
  std::vector<double> left;    // left cell edges

  static HalfLineGrid uniform(double x_max, int cells);
  static HalfLineGrid geometric(double x_min, double x_max, int cells);

  std::size_t size() const { return node.size(); }
};

}  // namespace hardy
