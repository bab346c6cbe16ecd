#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

#include "grid.hpp"

namespace hardy {

/// Named deterministic generator for grid functions. `extent` is the
/// largest |x|_inf the generator needs inside the box: sample() rejects
/// grids whose halfwidth cannot hold it. Compactly supported profiles
/// use their support radius; unbounded ones (gaussian) use the radius
/// where they have decayed below 1e-12; periodic ones use 0.
struct TestFunction {
  std::string name;
  double extent = 0.0;
  std::function<double(const std::array<double, 3>&, const GridSpec&)> profile;

  GridFunction sample(const GridSpec& spec) const;
};

TestFunction gaussian(std::array<double, 3> center = {0, 0, 0}, double width = 1.0);
TestFunction bump(std::array<double, 3> center = {0, 0, 0}, double radius = 1.0);
TestFunction plateau(double r_in = 1.0, double r_out = 2.0);
TestFunction random_bandlimited(std::uint64_t seed, int max_mode = 6);

/// Half-line profile x^(-1/p) on [1, T], zero elsewhere.
double power_cutoff(double x, double p, double T);

}  // namespace hardy
