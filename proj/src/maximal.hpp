#pragma once

#include <span>

#include "grid.hpp"

namespace hardy {

/// Discrete balls are node sets under Euclidean distance with measure
/// count * h^n; candidate radii are the grid-aligned r_m = m*h, m >= 1.
/// Balls are clipped at the box boundary (no periodic wrap): the average
/// runs over the in-domain nodes only.
enum class MaximalMode { centered, uncentered };

struct MaximalConfig {
  MaximalMode mode = MaximalMode::centered;
};

/// Centered maximal function: at each node, the largest average of |f|
/// over balls B(x, m*h).
GridFunction maximal_centered(const GridFunction& f);

/// Uncentered maximal function. In 1-D this is the exact sup over all
/// grid intervals containing x (endpoint enumeration with pruning);
/// in higher dimensions it falls back to grid-centered balls that
/// contain x.
GridFunction maximal_uncentered(const GridFunction& f);

GridFunction maximal(const GridFunction& f, const MaximalConfig& cfg);

/// Largest alpha * measure{Tf > alpha} / ||f||_1 over the given levels:
/// the empirical weak (1,1) constant of whatever operator produced Tf.
double weak_type_constant(const GridFunction& Tf, const GridFunction& f,
                          std::span<const double> alphas);

/// ||Mf||_p / ||f||_p for p > 1.
double strong_type_ratio(const GridFunction& f, double p,
                         const MaximalConfig& cfg = {});

/// (M(|f|^q))^{1/q} pointwise, q >= 1.
GridFunction power_maximal(const GridFunction& f, double q,
                           const MaximalConfig& cfg = {});

}  // namespace hardy
