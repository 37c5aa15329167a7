#pragma once

#include <vector>

#include "hmc/analytic.hpp"
#include "hmc/grid.hpp"

namespace hmc {

// Full two-sided Fourier data of a grid function; bin k holds frequency k
// for k < n/2 and frequency k - n for k >= n/2.
struct Spectrum {
  std::size_t n = 0;
  std::vector<cplx> coeff;

  // signed frequency access, k in [-n/2, n/2 - 1]
  cplx at_freq(long k) const;
};

Spectrum analyze(const BoundaryFn& f);
BoundaryFn synthesize(const Spectrum& s, ValueKind kind);

// Conjugate function: Fourier multiplier -i*sign(k), mean mode mapped to 0.
// Rejects complex-kind input.  The Nyquist mode is annihilated (it has no
// well-defined sign on an even grid).
BoundaryFn hilbert_transform(const BoundaryFn& u);

// u + i*hilbert_transform(u) as a one-sided expansion:
// c_0 = mean(u), c_k = 2*u_hat(k) for k >= 1.  Real input only.
AnalyticFn analytic_completion(const BoundaryFn& u);

// Zeroes every negative-frequency mode (Nyquist included) and returns the
// nonnegative part as an AnalyticFn of degree n/2 - 1.  Idempotent and the
// identity on traces of AnalyticFn.
AnalyticFn riesz_project(const BoundaryFn& h);

// Same contract as AnalyticFn::eval; named entry point so the truncation
// tail bound |c|_max * r_max^{M+1} / (1 - r_max) has one documented home.
cplx eval_interior(const AnalyticFn& f, cplx z, double r_max = kDefaultRMax);

// P_theta(z) = (1 - |z|^2) / |e^{i theta} - z|^2, for |z| < 1.
double poisson_kernel(double theta, cplx z);

// Grid quadrature (1/n) * sum_j u(theta_j) P_{theta_j}(z).
cplx poisson_extend(const BoundaryFn& u, cplx z, double r_max = kDefaultRMax);

// Dyadic-arc BMO norm: max over arcs of length n, n/2, ..., 8 cells at all
// aligned offsets of the mean oscillation (1/|I|) int_I |u - u_I|.
double bmo_norm(const BoundaryFn& u);

}  // namespace hmc
