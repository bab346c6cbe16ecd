#include "maximal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hardy {

namespace {

// Bucket index of a squared integer cell offset: the smallest m with
// |y - x| <= m*h. Exact for perfect squares, and non-squares cannot tie.
int bucket_of(double d2) { return static_cast<int>(std::ceil(std::sqrt(d2))); }

void require_maximal_size(const GridSpec& spec, std::size_t cap, const char* op) {
  if (spec.size() > cap)
    throw std::invalid_argument(std::string(op) + ": grid exceeds the cost cap");
}

// Per-node ball averages of |f| for every grid radius, accumulated into
// shared bucket scratch. Returns the running best over m >= 1.
class BallAverager {
 public:
  explicit BallAverager(const GridFunction& f)
      : spec_(f.spec()), n_(f.size()), absf_(n_), cells_(n_) {
    const auto v = f.values();
    for (std::size_t i = 0; i < n_; ++i) absf_[i] = std::abs(v[i]);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto k = spec_.unpack(i);
      cells_[i] = k;
    }
    max_bucket_ =
        bucket_of(static_cast<double>(spec_.dim) *
                  static_cast<double>(spec_.points) * spec_.points) + 1;
    sums_.resize(max_bucket_ + 1);
    counts_.resize(max_bucket_ + 1);
  }

  // Fills the bucket scratch for node i; afterwards prefix() walks it.
  void accumulate(std::size_t i) {
    std::fill(sums_.begin(), sums_.end(), 0.0);
    std::fill(counts_.begin(), counts_.end(), 0);
    const auto& ci = cells_[i];
    for (std::size_t j = 0; j < n_; ++j) {
      const auto& cj = cells_[j];
      double d2 = 0.0;
      for (int d = 0; d < spec_.dim; ++d) {
        const double diff = ci[d] - cj[d];
        d2 += diff * diff;
      }
      const int m = bucket_of(d2);
      sums_[m] += absf_[j];
      counts_[m] += 1;
    }
  }

  // Best average over balls of radius m*h, m >= 1; optionally records
  // the average at every radius (index m, radii past full coverage keep
  // the final value).
  double best(std::vector<double>* per_radius = nullptr) const {
    double cum = sums_[0];
    std::size_t cnt = counts_[0];
    double top = 0.0;
    if (per_radius) per_radius->assign(max_bucket_ + 1, 0.0);
    for (int m = 1; m <= max_bucket_; ++m) {
      cum += sums_[m];
      cnt += counts_[m];
      const double avg = cum / static_cast<double>(cnt);
      top = std::max(top, avg);
      if (per_radius) (*per_radius)[m] = avg;
      if (cnt == n_ && !per_radius) break;  // ball covers the box; constant from here
    }
    if (per_radius) (*per_radius)[0] = (*per_radius)[1];
    return top;
  }

  int max_bucket() const { return max_bucket_; }

 private:
  GridSpec spec_;
  std::size_t n_;
  std::vector<double> absf_;
  std::vector<std::array<int, 3>> cells_;
  std::vector<double> sums_;
  std::vector<std::size_t> counts_;
  int max_bucket_ = 0;
};

GridFunction uncentered_1d(const GridFunction& f) {
  const std::size_t n = f.size();
  const auto v = f.values();
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] + std::abs(v[j]);
  std::vector<double> sufmax(n + 2, 0.0);
  sufmax[n] = prefix[n];
  for (std::size_t j = n; j-- > 0;) sufmax[j] = std::max(prefix[j], sufmax[j + 1]);

  GridFunction out(f.spec());
  for (std::size_t x = 0; x < n; ++x) {
    double best = std::abs(v[x]);  // the single-node interval
    for (std::size_t i = x + 1; i-- > 0;) {
      // Upper bound for any interval starting at i: largest right prefix
      // over the shortest admissible length.
      const double ub = (sufmax[x + 1] - prefix[i]) / static_cast<double>(x + 1 - i);
      if (ub <= best) continue;
      for (std::size_t j = x; j < n; ++j) {
        const double len = static_cast<double>(j + 1 - i);
        const double avg = (prefix[j + 1] - prefix[i]) / len;
        if (avg > best) best = avg;
        const double tail = (sufmax[j + 1] - prefix[i]) / len;
        if (tail <= best) break;
      }
    }
    out[x] = best;
  }
  return out;
}

// n >= 2 fallback: sup over grid-centered balls that contain x.
GridFunction uncentered_by_centers(const GridFunction& f) {
  require_maximal_size(f.spec(), 4096, "maximal_uncentered");
  const GridSpec& spec = f.spec();
  const std::size_t n = f.size();
  BallAverager avgs(f);
  const int mb = avgs.max_bucket();

  // suffix max over radii of each center's average profile
  std::vector<double> profile;
  std::vector<double> smax(n * static_cast<std::size_t>(mb + 1));
  for (std::size_t c = 0; c < n; ++c) {
    avgs.accumulate(c);
    avgs.best(&profile);
    double running = 0.0;
    for (int m = mb; m >= 0; --m) {
      running = std::max(running, profile[m]);
      smax[c * (mb + 1) + m] = running;
    }
  }

  GridFunction out(spec);
  for (std::size_t x = 0; x < n; ++x) {
    const auto kx = spec.unpack(x);
    double best = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      const auto kc = spec.unpack(c);
      double d2 = 0.0;
      for (int d = 0; d < spec.dim; ++d) {
        const double diff = kx[d] - kc[d];
        d2 += diff * diff;
      }
      const int m = std::max(1, bucket_of(d2));
      best = std::max(best, smax[c * (mb + 1) + m]);
    }
    out[x] = best;
  }
  return out;
}

}  // namespace

GridFunction maximal_centered(const GridFunction& f) {
  require_maximal_size(f.spec(), 16384, "maximal_centered");
  BallAverager avgs(f);
  GridFunction out(f.spec());
  for (std::size_t i = 0; i < f.size(); ++i) {
    avgs.accumulate(i);
    out[i] = avgs.best();
  }
  return out;
}

GridFunction maximal_uncentered(const GridFunction& f) {
  if (f.spec().dim == 1) {
    require_maximal_size(f.spec(), 16384, "maximal_uncentered");
    return uncentered_1d(f);
  }
  return uncentered_by_centers(f);
}

GridFunction maximal(const GridFunction& f, const MaximalConfig& cfg) {
  return cfg.mode == MaximalMode::centered ? maximal_centered(f)
                                           : maximal_uncentered(f);
}

double weak_type_constant(const GridFunction& Tf, const GridFunction& f,
                          std::span<const double> alphas) {
  if (!(Tf.spec() == f.spec()))
    throw std::invalid_argument("weak_type_constant: grid mismatch");
  if (alphas.empty())
    throw std::invalid_argument("weak_type_constant: no levels given");
  const double norm1 = integrate_abs_pow(f, 1.0);
  if (!(norm1 > 0.0))
    throw std::invalid_argument("weak_type_constant: ||f||_1 must be positive");

  const double cell = f.spec().cell_measure();
  double best = 0.0;
  for (double alpha : alphas) {
    if (!(alpha > 0.0))
      throw std::invalid_argument("weak_type_constant: levels must be positive");
    std::size_t count = 0;
    for (double t : Tf.values())
      if (t > alpha) ++count;
    best = std::max(best, alpha * cell * static_cast<double>(count) / norm1);
  }
  return best;
}

double strong_type_ratio(const GridFunction& f, double p, const MaximalConfig& cfg) {
  if (!(p > 1.0)) throw std::invalid_argument("strong_type_ratio: p must be > 1");
  const double denom = lp_norm(f, p);
  if (!(denom > 0.0))
    throw std::invalid_argument("strong_type_ratio: f must be nonzero");
  return lp_norm(maximal(f, cfg), p) / denom;
}

GridFunction power_maximal(const GridFunction& f, double q, const MaximalConfig& cfg) {
  if (!(q >= 1.0)) throw std::invalid_argument("power_maximal: q must be >= 1");
  GridFunction w(f.spec());
  const auto v = f.values();
  for (std::size_t i = 0; i < f.size(); ++i)
    w[i] = q == 1.0 ? std::abs(v[i]) : std::pow(std::abs(v[i]), q);
  GridFunction m = maximal(w, cfg);
  if (q != 1.0)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::pow(m[i], 1.0 / q);
  return m;
}

}  // namespace hardy
