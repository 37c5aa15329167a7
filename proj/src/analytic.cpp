#include "hmc/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hmc/errors.hpp"
#include "hmc/fft.hpp"

namespace hmc {

cplx AnalyticFn::eval(cplx z, double r_max) const {
  if (std::abs(z) > r_max + 1e-15)
    throw ValidationError("AnalyticFn::eval: |z| = " +
                          std::to_string(std::abs(z)) +
                          " exceeds r_max = " + std::to_string(r_max));
  if (coeff.empty()) return {};
  cplx acc = coeff.back();
  for (std::size_t k = coeff.size() - 1; k-- > 0;) acc = acc * z + coeff[k];
  return acc;
}

AnalyticFn AnalyticFn::damped(double rho) const {
  AnalyticFn out;
  out.coeff.resize(coeff.size());
  double p = 1.0;
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    out.coeff[k] = coeff[k] * p;
    p *= rho;
  }
  return out;
}

BoundaryFn AnalyticFn::trace(const CircleGrid& grid) const {
  if (grid.n < 2 * coeff.size())
    throw ValidationError(
        "AnalyticFn::trace: grid too coarse for degree " +
        std::to_string(degree()) + " (need n >= " +
        std::to_string(2 * coeff.size()) + ")");
  std::vector<cplx> bins(grid.n, cplx{0.0, 0.0});
  std::copy(coeff.begin(), coeff.end(), bins.begin());
  fft_inplace(bins, +1);
  return make_complex_fn(grid, std::move(bins));
}

double AnalyticFn::sup_boundary(std::size_t oversample) const {
  std::size_t n = 8;
  while (n < 2 * coeff.size() * std::max<std::size_t>(oversample, 1)) n <<= 1;
  const BoundaryFn t = trace(CircleGrid{n});
  return sup_norm(t);
}

AnalyticFn operator+(const AnalyticFn& a, const AnalyticFn& b) {
  AnalyticFn out;
  out.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), cplx{0.0, 0.0});
  for (std::size_t k = 0; k < a.coeff.size(); ++k) out.coeff[k] += a.coeff[k];
  for (std::size_t k = 0; k < b.coeff.size(); ++k) out.coeff[k] += b.coeff[k];
  return out;
}

AnalyticFn operator*(double s, const AnalyticFn& a) {
  AnalyticFn out = a;
  for (auto& c : out.coeff) c *= s;
  return out;
}

}  // namespace hmc
