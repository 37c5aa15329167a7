#include "hmc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hmc/errors.hpp"
#include "hmc/fft.hpp"

namespace hmc {

cplx Spectrum::at_freq(long k) const {
  const long half = static_cast<long>(n) / 2;
  if (k < -half || k >= half)
    throw ValidationError("Spectrum::at_freq: frequency out of range");
  const std::size_t bin =
      k >= 0 ? static_cast<std::size_t>(k)
             : static_cast<std::size_t>(k + static_cast<long>(n));
  return coeff[bin];
}

Spectrum analyze(const BoundaryFn& f) {
  check_boundary_fn(f);
  Spectrum s;
  s.n = f.grid.n;
  s.coeff = f.values;
  fft_inplace(s.coeff, -1);
  const double inv = 1.0 / static_cast<double>(s.n);
  for (auto& c : s.coeff) c *= inv;
  return s;
}

BoundaryFn synthesize(const Spectrum& s, ValueKind kind) {
  std::vector<cplx> v = s.coeff;
  fft_inplace(v, +1);
  if (kind == ValueKind::real)
    for (auto& x : v) x = cplx{x.real(), 0.0};
  BoundaryFn f;
  f.grid = CircleGrid{s.n};
  f.values = std::move(v);
  f.kind = kind;
  return f;
}

BoundaryFn hilbert_transform(const BoundaryFn& u) {
  check_boundary_fn(u);
  if (u.kind != ValueKind::real)
    throw ValidationError("hilbert_transform: input must be real-kind");
  Spectrum s = analyze(u);
  const std::size_t n = s.n;
  const std::size_t half = n / 2;
  s.coeff[0] = cplx{0.0, 0.0};
  s.coeff[half] = cplx{0.0, 0.0};  // Nyquist
  const cplx mi{0.0, -1.0};
  const cplx pi_{0.0, 1.0};
  for (std::size_t k = 1; k < half; ++k) {
    s.coeff[k] *= mi;
    s.coeff[n - k] *= pi_;
  }
  return synthesize(s, ValueKind::real);
}

AnalyticFn analytic_completion(const BoundaryFn& u) {
  check_boundary_fn(u);
  if (u.kind != ValueKind::real)
    throw ValidationError("analytic_completion: input must be real-kind");
  Spectrum s = analyze(u);
  const std::size_t half = s.n / 2;
  AnalyticFn f;
  f.coeff.resize(half);  // degree n/2 - 1, Nyquist dropped
  f.coeff[0] = cplx{s.coeff[0].real(), 0.0};
  for (std::size_t k = 1; k < half; ++k) f.coeff[k] = 2.0 * s.coeff[k];
  return f;
}

AnalyticFn riesz_project(const BoundaryFn& h) {
  check_boundary_fn(h);
  Spectrum s = analyze(h);
  const std::size_t half = s.n / 2;
  AnalyticFn f;
  f.coeff.assign(s.coeff.begin(), s.coeff.begin() + static_cast<long>(half));
  return f;
}

cplx eval_interior(const AnalyticFn& f, cplx z, double r_max) {
  return f.eval(z, r_max);
}

double poisson_kernel(double theta, cplx z) {
  const double r2 = std::norm(z);
  if (r2 >= 1.0)
    throw ValidationError("poisson_kernel: |z| must be < 1");
  const cplx e{std::cos(theta), std::sin(theta)};
  return (1.0 - r2) / std::norm(e - z);
}

cplx poisson_extend(const BoundaryFn& u, cplx z, double r_max) {
  check_boundary_fn(u);
  if (std::abs(z) > r_max + 1e-15)
    throw ValidationError("poisson_extend: |z| exceeds r_max");
  const std::size_t n = u.grid.n;
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j)
    acc += u.values[j] * poisson_kernel(u.grid.point(j), z);
  return acc / static_cast<double>(n);
}

double bmo_norm(const BoundaryFn& u) {
  check_boundary_fn(u);
  const std::size_t n = u.grid.n;
  // prefix sums over a doubled array so arcs never wrap
  std::vector<cplx> pre(2 * n + 1, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < 2 * n; ++j)
    pre[j + 1] = pre[j] + u.values[j % n];

  double best = 0.0;
  for (std::size_t len = n; len >= 8; len >>= 1) {
    for (std::size_t start = 0; start < n; start += len) {
      const cplx mean =
          (pre[start + len] - pre[start]) / static_cast<double>(len);
      double osc = 0.0;
      for (std::size_t j = start; j < start + len; ++j)
        osc += std::abs(u.values[j % n] - mean);
      best = std::max(best, osc / static_cast<double>(len));
    }
  }
  return best;
}

}  // namespace hmc
