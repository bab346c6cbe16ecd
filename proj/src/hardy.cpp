#include "hardy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "maximal.hpp"
#include "numerics.hpp"
#include "spectral.hpp"
#include "testfam.hpp"

namespace hardy {

SplitConfig SplitConfig::make(double kappa) {
  if (!(kappa >= 2.0))
    throw std::invalid_argument("SplitConfig: kappa must be >= 2");
  return SplitConfig{kappa};
}

CheckReport classical_hardy_check(const HalfLineGrid& grid,
                                  std::span<const double> f, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("classical_hardy_check: p must be > 1");
  if (f.size() != grid.size())
    throw std::invalid_argument("classical_hardy_check: sample count mismatch");
  double norm = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] < 0.0)
      throw std::invalid_argument("classical_hardy_check: f must be nonnegative");
    norm += f[k] * grid.weight[k];
  }
  if (!(norm > 0.0))
    throw std::invalid_argument("classical_hardy_check: f must not vanish identically");

  const std::size_t n = grid.size();
  // F at a node: full cells to the left plus the partial cell up to the node.
  std::vector<double> F(n);
  double running = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    F[k] = running + f[k] * (grid.node[k] - grid.left[k]);
    running += f[k] * grid.weight[k];
  }

  const double lhs = compensated_sum(n, [&](std::size_t k) {
    const double ratio = F[k] / grid.node[k];
    return std::pow(ratio, p) * grid.weight[k];
  });
  const double constant = std::pow(p / (p - 1.0), p);
  const double fp = compensated_sum(n, [&](std::size_t k) {
    return std::pow(f[k], p) * grid.weight[k];
  });
  const double rhs = constant * fp;

  CheckReport r;
  r.check = "classical-hardy";
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = lhs / rhs;
  r.constant = constant;
  r.pass = lhs < rhs;
  r.dim = 1;
  r.p = p;
  r.points = static_cast<int>(n);
  r.halfwidth = grid.left.back() + grid.weight.back();
  return r;
}

std::vector<CheckReport> classical_sharpness_sweep(double p,
                                                   std::span<const double> T_list,
                                                   int cells, double tail_factor) {
  if (!(p > 1.0)) throw std::invalid_argument("sharpness sweep: p must be > 1");
  if (T_list.empty()) throw std::invalid_argument("sharpness sweep: empty T list");
  double prev_T = 0.0;
  for (double T : T_list) {
    if (!(T >= 10.0) || T <= prev_T)
      throw std::invalid_argument("sharpness sweep: T list must increase, T >= 10");
    prev_T = T;
  }

  std::vector<CheckReport> out;
  double prev_ratio = -1.0;
  for (double T : T_list) {
    // Geometric cells resolve [1, T] and a tail long enough that the
    // truncated part of the decaying integrand is negligible.
    const HalfLineGrid grid = HalfLineGrid::geometric(1.0, tail_factor * T, cells);
    std::vector<double> f(grid.size());
    for (std::size_t k = 0; k < f.size(); ++k)
      f[k] = power_cutoff(grid.node[k], p, T);
    CheckReport r = classical_hardy_check(grid, f, p);
    r.check = "classical-sharpness";
    r.halfwidth = T;
    r.pass = r.pass && r.ratio > prev_ratio;
    r.note = "T=" + format_double(T);
    prev_ratio = r.ratio;
    out.push_back(std::move(r));
  }
  return out;
}

CheckReport cazenave_check(const GridFunction& u, double p, double q) {
  const int n = u.spec().dim;
  if (!(p >= 1.0)) throw std::invalid_argument("cazenave_check: p must be >= 1");
  if (!(q >= 0.0) || !(q <= p))
    throw std::invalid_argument("cazenave_check: need 0 <= q <= p");
  if (!(q < n)) throw std::invalid_argument("cazenave_check: need q < n");

  const double lhs = weighted_integral(u, p, q);
  const double constant = std::pow(p / (n - q), q);
  const double u_norm = lp_norm(u, p);
  const double grad_norm = lp_norm(gradient_magnitude(u), p);
  const double rhs = constant * std::pow(u_norm, p - q) * std::pow(grad_norm, q);

  CheckReport r;
  r.check = "cazenave";
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = lhs / rhs;
  r.constant = constant;
  r.pass = lhs <= rhs * (1.0 + 1e-12);
  r.dim = n;
  r.p = p;
  r.q = q;
  r.points = u.spec().points;
  r.halfwidth = u.spec().halfwidth;
  return r;
}

CheckReport fractional_hardy_quotient(const GridFunction& u, const Exponents& exps) {
  if (exps.endpoint_case || !(exps.s * exps.p < exps.dim))
    throw std::invalid_argument(
        "fractional_hardy_quotient: s*p = n is the blow-up regime, use "
        "endpoint_blowup");
  if (u.spec().dim != exps.dim)
    throw std::invalid_argument("fractional_hardy_quotient: dimension mismatch");

  // Seminorms only see u modulo constants; use the projected function on
  // both sides so the s = 0 case collapses to an exact identity.
  const double m = u.mean();
  GridFunction ut(u.spec());
  for (std::size_t i = 0; i < u.size(); ++i) ut[i] = u[i] - m;

  const double lhs = weighted_integral(ut, exps.p, exps.s * exps.p);
  const double denom = integrate_abs_pow(frac_laplacian(ut, exps.s), exps.p);
  if (!(denom > 0.0))
    throw std::invalid_argument("fractional_hardy_quotient: zero Sobolev norm");

  CheckReport r;
  r.check = "fractional-hardy";
  r.lhs = lhs;
  r.rhs = denom;
  r.ratio = lhs / denom;
  r.pass = std::isfinite(r.ratio);
  r.dim = exps.dim;
  r.p = exps.p;
  r.s = exps.s;
  r.points = u.spec().points;
  r.halfwidth = u.spec().halfwidth;
  return r;
}

double empirical_constant(std::span<const GridFunction> family, const Exponents& exps) {
  if (family.empty()) throw std::invalid_argument("empirical_constant: empty family");
  double best = 0.0;
  for (const auto& u : family)
    best = std::max(best, fractional_hardy_quotient(u, exps).ratio);
  return best;
}

std::vector<BlowupRow> endpoint_blowup(const Exponents& exps,
                                       std::span<const double> eps_list,
                                       const GridSpec& grid) {
  if (!exps.endpoint_case &&
      std::abs(exps.s * exps.p - exps.dim) > 1e-12 * exps.dim)
    throw std::invalid_argument("endpoint_blowup: requires s*p = n");
  if (eps_list.empty()) throw std::invalid_argument("endpoint_blowup: empty eps list");
  for (double e : eps_list)
    if (!(e > 0.0)) throw std::invalid_argument("endpoint_blowup: eps must be positive");
  if (grid.dim != exps.dim)
    throw std::invalid_argument("endpoint_blowup: dimension mismatch");

  const GridFunction u = plateau().sample(grid);
  const double rhs = integrate_abs_pow(frac_laplacian(u, exps.s), exps.p);

  std::vector<BlowupRow> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) {
    const double lhs = weighted_integral(u, exps.p, static_cast<double>(exps.dim), eps);
    rows.push_back({eps, lhs, rhs});
  }
  return rows;
}

CheckReport interpolation_check(const GridFunction& u, double s, double p) {
  if (!(s >= 0.0) || !(s <= 1.0))
    throw std::invalid_argument("interpolation_check: s must lie in [0, 1]");
  if (!(p >= 1.0)) throw std::invalid_argument("interpolation_check: p must be >= 1");

  const double lhs = integrate_abs_pow(frac_laplacian(u, s), p);
  const double u_norm = lp_norm(u, p);
  const double grad_norm = lp_norm(gradient_magnitude(u), p);
  const double rhs =
      std::pow(u_norm, p * (1.0 - s)) * std::pow(grad_norm, p * s);

  CheckReport r;
  r.check = "interpolation";
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = lhs / rhs;
  r.dim = u.spec().dim;
  r.p = p;
  r.s = s;
  r.points = u.spec().points;
  r.halfwidth = u.spec().halfwidth;
  if (p == 2.0) {
    r.pass = r.ratio <= 1.0 + 1e-8;
    r.constant = 1.0;
  } else {
    r.pass = std::isfinite(r.ratio);
    r.note = "constant unknown for p != 2; ratio recorded only";
  }
  return r;
}

namespace {

struct PairGeometry {
  const GridSpec& spec;
  std::vector<std::array<double, 3>> pts;
  std::vector<double> radii;

  explicit PairGeometry(const GridSpec& s) : spec(s) {
    const std::size_t n = s.size();
    pts.resize(n);
    radii.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      pts[i] = s.point(i);
      radii[i] = s.radius(i);
    }
  }

  double dist(std::size_t i, std::size_t j) const {
    double d2 = 0.0;
    for (int d = 0; d < spec.dim; ++d) {
      const double diff = pts[i][d] - pts[j][d];
      d2 += diff * diff;
    }
    return std::sqrt(d2);
  }
};

void require_split_exponent(double s, int dim) {
  if (!(s > 0.0) || !(s < dim))
    throw std::invalid_argument("split kernel: need 0 < s < n");
}

}  // namespace

SplitParts split_operator(const GridFunction& f, double s, const SplitConfig& cfg) {
  const GridSpec& spec = f.spec();
  require_split_exponent(s, spec.dim);
  require_dense_op_size(spec, "split_operator");

  const PairGeometry geo(spec);
  const double cell = spec.cell_measure();
  const double diag = diagonal_cell_integral(spec, s);
  const std::size_t n = spec.size();
  const auto v = f.values();

  SplitParts parts{GridFunction(spec), GridFunction(spec)};
  for (std::size_t i = 0; i < n; ++i) {
    const double ax = geo.radii[i];
    const double wx = std::pow(ax, -s);
    double near = 0.0, far = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double term;
      if (j == i) {
        term = diag * std::abs(v[j]);  // singular cell, always near
      } else {
        const double d = geo.dist(i, j);
        term = std::abs(v[j]) * std::pow(d, s - spec.dim) * cell;
        if (d > cfg.kappa * ax) {
          far += term;
          continue;
        }
      }
      near += term;
    }
    parts.near[i] = wx * near;
    parts.far[i] = wx * far;
  }
  return parts;
}

GridFunction weighted_kernel_apply(const GridFunction& f, double s) {
  const GridSpec& spec = f.spec();
  require_split_exponent(s, spec.dim);
  require_dense_op_size(spec, "weighted_kernel_apply");

  const PairGeometry geo(spec);
  const double cell = spec.cell_measure();
  const double diag = diagonal_cell_integral(spec, s);
  const std::size_t n = spec.size();
  const auto v = f.values();

  GridFunction out(spec);
  for (std::size_t i = 0; i < n; ++i) {
    const double row = compensated_sum(n, [&](std::size_t j) {
      if (j == i) return diag * std::abs(v[j]);
      return std::abs(v[j]) * std::pow(geo.dist(i, j), s - spec.dim) * cell;
    });
    out[i] = std::pow(geo.radii[i], -s) * row;
  }
  return out;
}

double a1_maximal_bound(const GridFunction& f, double s, const SplitConfig& cfg,
                        const GridFunction& maximal_of_f) {
  if (!(maximal_of_f.spec() == f.spec()))
    throw std::invalid_argument("a1_maximal_bound: grid mismatch");
  const SplitParts parts = split_operator(f, s, cfg);
  double sup = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (maximal_of_f[i] > 0.0)
      sup = std::max(sup, parts.near[i] / maximal_of_f[i]);
  }
  return sup;
}

double dyadic_sum(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("dyadic_sum: s must be positive");
  return 1.0 / (1.0 - std::pow(2.0, -s));
}

GridFunction b2_majorant(const GridFunction& f, double s, const SplitConfig& cfg) {
  const GridSpec& spec = f.spec();
  require_split_exponent(s, spec.dim);
  require_dense_op_size(spec, "b2_majorant");

  const PairGeometry geo(spec);
  const double cell = spec.cell_measure();
  const std::size_t n = spec.size();
  const auto v = f.values();

  GridFunction out(spec);
  for (std::size_t i = 0; i < n; ++i) {
    const double ax = geo.radii[i];
    const double row = compensated_sum(n, [&](std::size_t j) {
      if (!cfg.in_majorant_region(geo.radii[j], ax)) return 0.0;
      return v[j] * std::pow(geo.radii[j], s - spec.dim);
    });
    out[i] = std::pow(ax, -s) * row * cell;
  }
  return out;
}

GridFunction dual_T(const GridFunction& g, double s, const SplitConfig& cfg) {
  const GridSpec& spec = g.spec();
  require_split_exponent(s, spec.dim);
  require_dense_op_size(spec, "dual_T");

  const PairGeometry geo(spec);
  const double cell = spec.cell_measure();
  const std::size_t n = spec.size();
  const auto v = g.values();

  GridFunction out(spec);
  for (std::size_t j = 0; j < n; ++j) {
    const double ay = geo.radii[j];
    const double row = compensated_sum(n, [&](std::size_t i) {
      if (!cfg.in_majorant_region(ay, geo.radii[i])) return 0.0;
      return v[i] * std::pow(geo.radii[i], -s);
    });
    out[j] = std::pow(ay, s - spec.dim) * row * cell;
  }
  return out;
}

double duality_check(const GridFunction& f, const GridFunction& g, double s,
                     const SplitConfig& cfg) {
  return duality_check(f, g, s, cfg, cfg);
}

double duality_check(const GridFunction& f, const GridFunction& g, double s,
                     const SplitConfig& cfg_b2, const SplitConfig& cfg_dual) {
  if (!(cfg_b2 == cfg_dual))
    throw std::invalid_argument(
        "duality_check: majorant and dual operator use different region "
        "masks; the pairing identity only holds over one shared mask");
  if (!(f.spec() == g.spec()))
    throw std::invalid_argument("duality_check: grid mismatch");

  const GridFunction b2f = b2_majorant(f, s, cfg_b2);
  const GridFunction tg = dual_T(g, s, cfg_dual);
  const double cell = f.spec().cell_measure();
  const double lhs = cell * compensated_sum(f.size(), [&](std::size_t i) {
    return b2f[i] * g[i];
  });
  const double rhs = cell * compensated_sum(f.size(), [&](std::size_t i) {
    return tg[i] * f[i];
  });
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

double t_maximal_bound(const GridFunction& g, double s, double q,
                       const SplitConfig& cfg) {
  const int n = g.spec().dim;
  require_split_exponent(s, n);
  if (!(q > n / (n - s)))
    throw std::invalid_argument("t_maximal_bound: need q > n/(n-s) so s*q' < n");

  const GridFunction tg = dual_T(g, s, cfg);
  const GridFunction denom = power_maximal(g, q);
  double sup = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (denom[i] > 0.0) sup = std::max(sup, std::abs(tg[i]) / denom[i]);
  }
  return sup;
}

}  // namespace hardy
