#pragma once

#include <optional>

namespace hardy {

/// Validated exponent triple (n, p, s) with derived conjugates.
/// The admissible range is p > 1 and 0 <= s < n/p; the endpoint s*p = n
/// is only constructible through endpoint(), which tags the instance so
/// downstream checks can route it to the blow-up experiment.
struct Exponents {
  int dim = 1;
  double p = 2.0;
  double s = 0.0;
  bool endpoint_case = false;
  std::optional<double> holder_q;

  static Exponents make(int dim, double p, double s);
  static Exponents endpoint(int dim, double p);

  /// Copy with the Hoelder pair (q, q') attached; requires
  /// q in (n/(n-s), p'], which is equivalent to s*q' < n.
  Exponents with_holder(double q) const;

  double conjugate() const { return p / (p - 1.0); }      // p'
  double holder_conjugate() const;                        // q'
};

}  // namespace hardy
