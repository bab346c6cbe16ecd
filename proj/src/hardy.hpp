#pragma once

#include <span>
#include <vector>

#include "exponents.hpp"
#include "grid.hpp"
#include "report.hpp"

namespace hardy {

/// Near/far split of the weighted-kernel integral over node pairs (x, y):
/// near means |x - y| <= kappa|x| (ties to near), far is the complement.
/// The majorant/dual-operator region is |y| >= (kappa - 1)|x|; with
/// kappa >= 2 it contains the far region by the triangle inequality.
struct SplitConfig {
  double kappa = 100.0;

  static SplitConfig make(double kappa);
  double inner_factor() const { return kappa - 1.0; }

  /// The one shared pair predicate behind the majorant and its dual.
  bool in_majorant_region(double abs_y, double abs_x) const {
    return abs_y >= inner_factor() * abs_x;
  }

  bool operator==(const SplitConfig&) const = default;
};

/// Classical half-line check: F(x) = cumulative integral of f, compares
/// integral of (F/x)^p against (p/(p-1))^p * integral of f^p. Requires
/// f >= 0 and f not identically zero; passes iff lhs < rhs strictly.
CheckReport classical_hardy_check(const HalfLineGrid& grid,
                                  std::span<const double> f, double p);

/// Ratio sweep over the extremizing family x^{-1/p} on [1, T]: ratios
/// must stay below 1 and grow towards it as T increases.
std::vector<CheckReport> classical_sharpness_sweep(double p,
                                                   std::span<const double> T_list,
                                                   int cells = 16384,
                                                   double tail_factor = 100.0);

/// Gradient-based check: integral of |u|^p/|x|^q against
/// (p/(n-q))^q ||u||_p^{p-q} ||grad u||_p^q, for 0 <= q <= p, q < n.
CheckReport cazenave_check(const GridFunction& u, double p, double q);

/// Weighted-integral quotient Q = [integral |u|^p/|x|^{sp}] / ||u||_{W^{s,p}}^p
/// for the zero-mode-projected u. Rejects the endpoint s*p = n.
CheckReport fractional_hardy_quotient(const GridFunction& u, const Exponents& exps);

/// Largest quotient over a function family.
double empirical_constant(std::span<const GridFunction> family, const Exponents& exps);

struct BlowupRow {
  double eps;
  double lhs;  // weighted integral outside |x| > eps
  double rhs;  // Sobolev seminorm^p, independent of eps
};

/// Endpoint experiment at s*p = n on the smoothed plateau: the weighted
/// integral grows like log(1/eps) while the Sobolev side stays fixed.
std::vector<BlowupRow> endpoint_blowup(const Exponents& endpoint,
                                       std::span<const double> eps_list,
                                       const GridSpec& grid);

/// Compares ||u||_{W^{s,p}}^p against ||u||_p^{p(1-s)} ||grad u||_p^{ps}
/// for s in [0, 1]. At p = 2 the ratio must not exceed 1 (frequency-side
/// Hoelder); at other p the ratio is recorded without a pass threshold.
CheckReport interpolation_check(const GridFunction& u, double s, double p);

struct SplitParts {
  GridFunction near;  // A1
  GridFunction far;   // A2
};

/// Weighted Riesz-type kernel |x-y|^{s-n}|x|^{-s} applied to |f|, split
/// over the near/far regions. near + far reproduces the unsplit operator
/// exactly (same summands, complementary masks).
SplitParts split_operator(const GridFunction& f, double s, const SplitConfig& cfg);

/// The unsplit operator, evaluated independently (partition oracle).
GridFunction weighted_kernel_apply(const GridFunction& f, double s);

/// sup over nodes (where M > 0) of near-part(x) / M(x), with
/// M = maximal_centered(|f|).
double a1_maximal_bound(const GridFunction& f, double s, const SplitConfig& cfg,
                        const GridFunction& maximal_of_f);

/// Geometric factor sum_{j<=0} 2^{js} = 1/(1 - 2^{-s}).
double dyadic_sum(double s);

/// Far-part majorant B2 f(x) = |x|^{-s} * sum over |y| >= (kappa-1)|x|
/// of f(y) |y|^{s-n} h^n. Dominates the far part pointwise for f >= 0.
GridFunction b2_majorant(const GridFunction& f, double s, const SplitConfig& cfg);

/// Formal adjoint of the majorant under the same pair mask:
/// T g(y) = |y|^{s-n} * sum over the mask of g(x) |x|^{-s} h^n.
GridFunction dual_T(const GridFunction& g, double s, const SplitConfig& cfg);

/// Relative defect |<B2 f, g> - <T g, f>| / max(|<B2 f, g>|, |<T g, f>|).
/// A discrete Fubini swap over one shared mask: stays at rounding level.
double duality_check(const GridFunction& f, const GridFunction& g, double s,
                     const SplitConfig& cfg);

/// Overload taking the configs both operators were built with; throws on
/// a mask mismatch instead of comparing incompatible operators.
double duality_check(const GridFunction& f, const GridFunction& g, double s,
                     const SplitConfig& cfg_b2, const SplitConfig& cfg_dual);

/// sup over y (where the denominator is positive) of
/// |T g(y)| / (M(|g|^q))^{1/q}(y). Requires q > n/(n-s).
double t_maximal_bound(const GridFunction& g, double s, double q,
                       const SplitConfig& cfg);

}  // namespace hardy
