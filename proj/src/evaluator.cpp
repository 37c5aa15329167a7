#include "hmc/evaluator.hpp"

#include <algorithm>
#include <cmath>

#include "hmc/errors.hpp"

namespace hmc {

namespace {
constexpr std::size_t kBuckets = 1024;
}

SeriesEvaluator::SeriesEvaluator(const AnalyticFn& f, double r_cap,
                                 double abs_tol)
    : coeff_(f.coeff), r_cap_(r_cap), tol_(abs_tol) {
  if (!(r_cap > 0.0 && r_cap < 1.0))
    throw ValidationError("SeriesEvaluator: r_cap must be in (0, 1)");
  if (!(abs_tol > 0.0))
    throw ValidationError("SeriesEvaluator: abs_tol must be positive");
  if (coeff_.empty()) coeff_.push_back(cplx{0.0, 0.0});
  r_cap2_inv_ = 1.0 / (r_cap * r_cap);

  const std::size_t m = coeff_.size();
  degree_.assign(kBuckets, 0);
  std::vector<double> weight(m);
  for (std::size_t b = 0; b < kBuckets; ++b) {
    // conservative: use the bucket's upper-edge radius
    const double r2 = (static_cast<double>(b + 1) / kBuckets) * r_cap * r_cap;
    const double r = std::sqrt(r2);
    double p = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
      weight[k] = std::abs(coeff_[k]) * p;
      p *= r;
    }
    double tail = 0.0;
    std::uint32_t need = 0;
    for (std::size_t k = m; k-- > 1;) {
      tail += weight[k];
      if (tail > abs_tol) {
        need = static_cast<std::uint32_t>(k);
        break;
      }
    }
    degree_[b] = need;
  }
}

cplx SeriesEvaluator::value(cplx z, double norm_z) const {
  if (norm_z > r_cap_ * r_cap_ * (1.0 + 1e-12))
    throw ValidationError("SeriesEvaluator: |z| exceeds r_cap");
  std::size_t b = static_cast<std::size_t>(norm_z * r_cap2_inv_ * kBuckets);
  if (b >= kBuckets) b = kBuckets - 1;
  const std::uint32_t deg = degree_[b];
  cplx acc = coeff_[deg];
  for (std::uint32_t k = deg; k-- > 0;) acc = acc * z + coeff_[k];
  return acc;
}

}  // namespace hmc
