#pragma once

#include <cstddef>
#include <vector>

#include "hmc/analytic.hpp"
#include "hmc/calibration.hpp"
#include "hmc/grid.hpp"
#include "hmc/martingale.hpp"

namespace hmc {

// Radius ladder r_k = 1 - 2^-k over a circle grid; the sampling set for
// cone maxima and interior level sets.
struct DiskGrid {
  std::vector<double> radii;
  CircleGrid base;
};

DiskGrid make_disk_grid(const CircleGrid& base, std::size_t levels = 10);

struct NontangentialMax {
  BoundaryFn fn;               // real-kind
  bool radial_fallback = false;  // some ring's cone window was empty
};

// f#(theta) = max of |F| over the cone {|z - e^{i theta}| <= aperture(1-|z|)}
// sampled on the disk grid, boundary sample included.  aperture in [1, 4].
NontangentialMax nontangential_max(const AnalyticFn& f, const DiskGrid& disk,
                                   double aperture = 2.0);

// Same cone maximum applied to |Re F| (for harmonic-function comparisons).
NontangentialMax nontangential_max_re(const AnalyticFn& f,
                                      const DiskGrid& disk,
                                      double aperture = 2.0);

struct MaximalFn {
  BoundaryFn fn;      // real-kind
  bool exact = true;  // false when the dyadic O(n log n) mode was used
};

// Hardy-Littlewood maximal function: sup over arcs containing the point of
// the arc average of |h|.  Exact over all O(n^2) grid arcs for n <= 8192,
// dyadic-arc approximation (flagged) above.
MaximalFn hardy_littlewood(const BoundaryFn& h);

// {theta_j : h(theta_j) > lambda} as a cell mask.
GridMask level_set(const BoundaryFn& h, double lambda);

struct TailFit {
  std::vector<double> lambdas;
  std::vector<double> measures;      // raw measure in [0, 2*pi]
  std::vector<double> log_measures;  // over the usable (nonzero) levels
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  bool saturated = false;  // some requested level had empty measure
};

// Fits log measure{f# > lambda} against lambda; requires at least four
// levels with nonempty level sets (DataError otherwise).  slope = -delta0,
// intercept = log C0.
TailFit jn_distribution(const BoundaryFn& f_sharp,
                        const std::vector<double>& lambda_grid);

struct CarlesonBox {
  double h = 0.0;
  double omega_over_h = 0.0;      // hitting mass of the box over h
  double grid_mass_over_h = 0.0;  // |{f# > lambda} cap 3 I_h| over h
};

struct Theorem3Report {
  bool h_empty = false;
  std::vector<double> ratios;      // per grid point, 0 where denominator is 0
  double c_emp = 0.0;              // 99th percentile of the ratios
  double max_residual_h_empty = 0.0;  // max |f - g| when H is empty
  std::vector<CarlesonBox> boxes;  // diagnostic at the worst-residual angle
  double probe_theta = 0.0;
};

// Pointwise comparison |f - g| <= C (|f| + lambda) M_HL(chi_{f# > lambda});
// samples (from the run that produced g) feed the Carleson-box diagnostic.
Theorem3Report theorem3_pointwise_check(const BoundaryFn& f_trace,
                                        const BoundaryFn& g_trace,
                                        const BoundaryFn& f_sharp,
                                        double lambda,
                                        const std::vector<PathSample>& samples);

struct GoodSetResult {
  double lambda = 0.0;
  GridMask B;
  GridMask H;
  GridMask J;
  double threshold = 0.0;        // e^{-lambda delta1}
  double max_mhl_on_B = 0.0;     // must be <= threshold, exactly
  double complement_measure = 0.0;
  double tail_term_g = 0.0;      // measure{|f| >= N}
  double tail_term_j = 0.0;      // measure(J)
};

// Removes the union J of arcs where {f# > lambda} has density above
// e^{-lambda delta1} from {|f| < N}; on the returned set the maximal
// function of the level-set indicator is at most the threshold, exactly.
// Uses lambda = N_bound (the delta1 = delta0/2 balance).
GoodSetResult good_set_B(const BoundaryFn& f_sharp,
                         const BoundaryFn& f_boundary, double N_bound,
                         const CalibrationConstants& consts);

}  // namespace hmc
