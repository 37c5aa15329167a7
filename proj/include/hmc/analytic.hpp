#pragma once

#include <cstddef>
#include <vector>

#include "hmc/grid.hpp"

namespace hmc {

// Default evaluation radius for power series; keeps the degree-2048 tail of
// unit-size coefficients below 1e-8.
inline constexpr double kDefaultRMax = 1.0 - 0x1p-10;

// Finite one-sided Fourier expansion sum_{k=0..M} c_k z^k.  Carrying only
// nonnegative frequencies is the holomorphy certificate: anything stored in
// this type is boundary data of a bounded analytic function on the disk.
struct AnalyticFn {
  std::vector<cplx> coeff;  // c_0 .. c_M

  std::size_t degree() const { return coeff.empty() ? 0 : coeff.size() - 1; }
  cplx at_origin() const { return coeff.empty() ? cplx{} : coeff[0]; }

  // Stable power-series (Horner) evaluation.  Throws for |z| > r_max; the
  // truncation story is documented at eval_interior in spectral.hpp.
  cplx eval(cplx z, double r_max = kDefaultRMax) const;

  // Coefficientwise damping c_k -> c_k * rho^k, i.e. F(rho * z).
  AnalyticFn damped(double rho) const;

  // Boundary samples F(e^{i theta_j}); requires grid.n >= 2 * (degree + 1).
  BoundaryFn trace(const CircleGrid& grid) const;

  // Max of |F| on an oversampled boundary grid.  By the maximum principle
  // this is the sup over the closed disk up to grid resolution.
  double sup_boundary(std::size_t oversample = 2) const;
};

AnalyticFn operator+(const AnalyticFn& a, const AnalyticFn& b);
AnalyticFn operator*(double s, const AnalyticFn& a);

}  // namespace hmc
