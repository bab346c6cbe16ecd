#include "exponents.hpp"

#include <cmath>
#include <stdexcept>

namespace hardy {

Exponents Exponents::make(int dim, double p, double s) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("Exponents: dim must be 1, 2 or 3");
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("Exponents: p must be > 1");
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::invalid_argument("Exponents: s must be >= 0");
  if (!(s * p < dim))
    throw std::invalid_argument("Exponents: s*p < n required (use endpoint() for s*p = n)");
  return Exponents{dim, p, s, false, std::nullopt};
}

Exponents Exponents::endpoint(int dim, double p) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("Exponents: dim must be 1, 2 or 3");
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("Exponents: p must be > 1");
  return Exponents{dim, p, dim / p, true, std::nullopt};
}

Exponents Exponents::with_holder(double q) const {
  const double n = dim;
  if (!(s < n))
    throw std::invalid_argument("Exponents: Hoelder pair needs s < n");
  const double q_min = n / (n - s);
  if (!(q > q_min))
    throw std::invalid_argument("Exponents: q must exceed n/(n-s)");
  if (!(q <= conjugate()))
    throw std::invalid_argument("Exponents: q must not exceed p'");
  Exponents out = *this;
  out.holder_q = q;
  return out;
}

double Exponents::holder_conjugate() const {
  if (!holder_q) throw std::logic_error("Exponents: no Hoelder pair set");
  const double q = *holder_q;
  return q / (q - 1.0);
}

}  // namespace hardy
