#pragma once

#include <cstddef>
#include <vector>

#include "hmc/analytic.hpp"

namespace hmc {

// Power-series evaluator tuned for millions of interior evaluations.  For
// each radius bucket it precomputes the smallest truncation degree whose
// certified coefficient tail sum_{k>K} |c_k| r^k stays below abs_tol, so a
// Horner pass runs only as deep as the current radius requires.  Values
// agree with AnalyticFn::eval to within abs_tol everywhere on |z| <= r_cap.
class SeriesEvaluator {
 public:
  SeriesEvaluator(const AnalyticFn& f, double r_cap, double abs_tol);

  double abs_tol() const { return tol_; }
  double r_cap() const { return r_cap_; }

  cplx value(cplx z) const { return value(z, std::norm(z)); }
  cplx value(cplx z, double norm_z) const;
  double modulus(cplx z, double norm_z) const { return std::abs(value(z, norm_z)); }

 private:
  std::vector<cplx> coeff_;
  std::vector<std::uint32_t> degree_;  // per |z|^2 bucket
  double r_cap_;
  double r_cap2_inv_;
  double tol_;
};

}  // namespace hmc
