#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "hmc/analytic.hpp"
#include "hmc/evaluator.hpp"
#include "hmc/grid.hpp"

namespace hmc {

inline constexpr double kNoLambda = std::numeric_limits<double>::infinity();

struct PathConfig {
  double dt = 1e-4;
  double r_exit = 1.0 - 0x1p-10;
  std::uint64_t seed = 1;
  std::size_t n_paths = 20000;
  std::size_t max_steps = 10'000'000;
};

void validate(const PathConfig& cfg);

// Outcome of one Euler-Maruyama walk of complex Brownian motion started
// inside the disk, stopped at the first grid time with |z| >= r_exit
// (sigma, exit point projected radially back to the circle) and tracking
// the first time tau with |F(z)| > lambda.  The walk always continues to
// sigma so the terminal value is available even when tau fired first.
struct PathSample {
  cplx exit_point;            // |exit_point| == r_exit
  cplx stopped_value;         // F at sigma^tau
  cplx terminal_value;        // F at sigma
  cplx tau_point;             // first point with |F| > lambda (iff tau_fired)
  double f_star = 0.0;        // running max of |F| along the path
  std::uint64_t steps = 0;    // increments taken until exit
  bool tau_fired = false;
  bool truncated = false;     // max_steps exhausted; excluded from estimates
};

struct PathBatch {
  std::vector<PathSample> samples;  // completed paths only
  std::size_t truncated_count = 0;
  double lambda = kNoLambda;
  cplx start;
  PathConfig cfg;

  double truncated_fraction() const {
    const double total =
        static_cast<double>(samples.size() + truncated_count);
    return total == 0.0 ? 0.0 : static_cast<double>(truncated_count) / total;
  }
};

// Single path, reproducible from (cfg.seed, path_index) alone.
PathSample simulate_path(const SeriesEvaluator& f, double lambda, cplx start,
                         const PathConfig& cfg, std::uint64_t path_index);
PathSample simulate_path(const AnalyticFn& f, double lambda, cplx start,
                         const PathConfig& cfg, std::uint64_t path_index);

PathBatch simulate_batch(const AnalyticFn& f, double lambda, cplx start,
                         const PathConfig& cfg, unsigned workers = 0);

// One trajectory sweep serving several thresholds at once: trajectories do
// not depend on lambda, only the stopping bookkeeping does.  Returns one
// batch per lambda, each bit-identical to a dedicated simulate_batch run.
std::vector<PathBatch> simulate_batch_multi(const AnalyticFn& f,
                                            const std::vector<double>& lambdas,
                                            cplx start, const PathConfig& cfg,
                                            unsigned workers = 0);

enum class PathValue { stopped, terminal, difference };

struct ProjectionEstimate {
  BoundaryFn fn;                  // complex-kind
  std::vector<double> std_error;  // per grid point, combined re/im
};

// Monte Carlo realization of the boundary projection N: averages
// value * P_theta(exit_point) over paths.  PathValue::difference uses
// terminal - stopped per path (zero unless tau fired).
ProjectionEstimate estimate_projection(const std::vector<PathSample>& samples,
                                       const CircleGrid& grid,
                                       PathValue which, unsigned workers = 0);
ProjectionEstimate estimate_projection(const std::vector<PathSample>& samples,
                                       const CircleGrid& grid,
                                       bool use_stopped, unsigned workers = 0);

struct MeasureEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
  bool degenerate = false;  // set when the target set was never hit
};

struct ScalarEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
};

// Hitting probability of A before exit (harmonic measure of A from start).
MeasureEstimate harmonic_measure(const std::function<bool(cplx)>& in_set,
                                 cplx start, const PathConfig& cfg,
                                 unsigned workers = 0);

// Fraction of exit points whose angle lies in the arc [lo, hi] (wrapping
// allowed when hi < lo).  Oracle companion: arc_poisson_mass.
MeasureEstimate exit_law_check(const std::vector<PathSample>& samples,
                               double arc_lo, double arc_hi);

// (1/2pi) * integral over the arc of P_psi(start) d psi, midpoint rule.
double arc_poisson_mass(double arc_lo, double arc_hi, cplx start,
                        std::size_t quad_points = 1 << 16);

// Balayage (sweep) of harmonic measure on the boundary of the level domain
// {|F| > lambda}: average of 1{tau fired} * P_theta(z_tau).
ScalarEstimate balayage_at(const std::vector<PathSample>& samples,
                           double theta);
ScalarEstimate balayage(const AnalyticFn& f, double lambda, double theta,
                        const PathConfig& cfg, unsigned workers = 0);

struct TailReport {
  double lhs = 0.0;     // mean |terminal - stopped|
  double rhs = 0.0;     // 2 * mean(1{f_star > lambda} * |terminal|)
  double lhs_se = 0.0;
  double rhs_se = 0.0;
  bool bound_ok = true;  // lhs <= rhs + 3 * combined se
  double mean_sq_terminal = 0.0;
  std::vector<double> tail_lambdas;  // levels for P(F* > lambda)
  std::vector<double> tail_probs;
};

// L1 contraction check for the stopped martingale plus the empirical F*
// tail over a level grid (default: spread between the median and the
// 1 - 50/n quantile of the observed maxima).
TailReport tail_bound_check(const std::vector<PathSample>& samples,
                            double lambda,
                            const std::vector<double>& tail_grid = {});

}  // namespace hmc
