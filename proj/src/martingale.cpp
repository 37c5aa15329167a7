#include "hmc/martingale.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hmc/errors.hpp"
#include "hmc/parallel.hpp"
#include "hmc/rng.hpp"
#include "hmc/spectral.hpp"

namespace hmc {

namespace {

constexpr std::size_t kPathBlock = 256;

double evaluator_tol(const AnalyticFn& f) {
  double amp = 0.0;
  for (const cplx& c : f.coeff) amp += std::abs(c);
  return 1e-7 * (1.0 + amp);
}

// walks one trajectory; lambdas must be sorted ascending, out must have
// one slot per lambda
void walk(const SeriesEvaluator& f, const double* lambdas, std::size_t n_lam,
          cplx start, const PathConfig& cfg, std::uint64_t path_index,
          PathSample* out) {
  const double sqrt_dt = std::sqrt(cfg.dt);
  const double r2_exit = cfg.r_exit * cfg.r_exit;

  cplx z = start;
  double f_star = 0.0;
  std::size_t next_lam = 0;

  {
    const cplx v0 = f.value(z, std::norm(z));
    const double m0 = std::abs(v0);
    f_star = m0;
    while (next_lam < n_lam && m0 > lambdas[next_lam]) {
      out[next_lam].tau_fired = true;
      out[next_lam].tau_point = z;
      out[next_lam].stopped_value = v0;
      ++next_lam;
    }
  }

  std::uint64_t step = 0;
  bool exited = false;
  cplx exit_point;
  for (; step < cfg.max_steps; ++step) {
    const GaussPair g = gauss_pair(cfg.seed, path_index, step);
    z += cplx{sqrt_dt * g.g0, sqrt_dt * g.g1};
    const double nz = std::norm(z);
    if (nz >= r2_exit) {
      exit_point = z * (cfg.r_exit / std::sqrt(nz));
      exited = true;
      ++step;
      break;
    }
    const cplx v = f.value(z, nz);
    const double m = std::abs(v);
    if (m > f_star) f_star = m;
    while (next_lam < n_lam && m > lambdas[next_lam]) {
      out[next_lam].tau_fired = true;
      out[next_lam].tau_point = z;
      out[next_lam].stopped_value = v;
      ++next_lam;
    }
  }

  if (!exited) {
    for (std::size_t l = 0; l < n_lam; ++l) {
      out[l].truncated = true;
      out[l].steps = step;
    }
    return;
  }

  const cplx terminal = f.value(exit_point, r2_exit);
  f_star = std::max(f_star, std::abs(terminal));
  for (std::size_t l = 0; l < n_lam; ++l) {
    out[l].exit_point = exit_point;
    out[l].terminal_value = terminal;
    if (!out[l].tau_fired) out[l].stopped_value = terminal;
    out[l].f_star = f_star;
    out[l].steps = step;
    out[l].truncated = false;
  }
}

}  // namespace

void validate(const PathConfig& cfg) {
  if (!(cfg.dt > 0.0 && cfg.dt <= 1e-3))
    throw ValidationError("PathConfig: dt must be in (0, 1e-3]");
  if (!(cfg.r_exit >= 0.9 && cfg.r_exit <= 1.0 - 0x1p-12))
    throw ValidationError("PathConfig: r_exit must be in [0.9, 1 - 2^-12]");
  if (cfg.n_paths < 1) throw ValidationError("PathConfig: n_paths must be >= 1");
  if (cfg.max_steps < 1)
    throw ValidationError("PathConfig: max_steps must be >= 1");
}

PathSample simulate_path(const SeriesEvaluator& f, double lambda, cplx start,
                         const PathConfig& cfg, std::uint64_t path_index) {
  validate(cfg);
  if (std::abs(start) >= cfg.r_exit)
    throw ValidationError("simulate_path: |start| must be < r_exit");
  PathSample s;
  walk(f, &lambda, 1, start, cfg, path_index, &s);
  return s;
}

PathSample simulate_path(const AnalyticFn& f, double lambda, cplx start,
                         const PathConfig& cfg, std::uint64_t path_index) {
  SeriesEvaluator ev(f, cfg.r_exit, evaluator_tol(f));
  return simulate_path(ev, lambda, start, cfg, path_index);
}

std::vector<PathBatch> simulate_batch_multi(const AnalyticFn& f,
                                            const std::vector<double>& lambdas,
                                            cplx start, const PathConfig& cfg,
                                            unsigned workers) {
  validate(cfg);
  if (lambdas.empty())
    throw ValidationError("simulate_batch_multi: need at least one lambda");
  if (std::abs(start) >= cfg.r_exit)
    throw ValidationError("simulate_batch_multi: |start| must be < r_exit");
  if (workers == 0) workers = default_workers();

  // sort thresholds ascending, remember where each came from
  std::vector<std::size_t> order(lambdas.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lambdas[a] < lambdas[b];
  });
  std::vector<double> sorted(lambdas.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = lambdas[order[i]];

  const std::size_t n_lam = sorted.size();
  const SeriesEvaluator ev(f, cfg.r_exit, evaluator_tol(f));
  std::vector<PathSample> all(cfg.n_paths * n_lam);

  parallel_blocks(cfg.n_paths, kPathBlock, workers,
                  [&](std::size_t lo, std::size_t hi) {
                    std::vector<PathSample> slot(n_lam);
                    for (std::size_t i = lo; i < hi; ++i) {
                      std::fill(slot.begin(), slot.end(), PathSample{});
                      walk(ev, sorted.data(), n_lam, start, cfg, i,
                           slot.data());
                      for (std::size_t l = 0; l < n_lam; ++l)
                        all[l * cfg.n_paths + i] = slot[l];
                    }
                  });

  std::vector<PathBatch> result(n_lam);
  for (std::size_t l = 0; l < n_lam; ++l) {
    PathBatch& b = result[order[l]];
    b.lambda = sorted[l];
    b.start = start;
    b.cfg = cfg;
    b.samples.reserve(cfg.n_paths);
    for (std::size_t i = 0; i < cfg.n_paths; ++i) {
      const PathSample& s = all[l * cfg.n_paths + i];
      if (s.truncated)
        ++b.truncated_count;
      else
        b.samples.push_back(s);
    }
  }
  return result;
}

PathBatch simulate_batch(const AnalyticFn& f, double lambda, cplx start,
                         const PathConfig& cfg, unsigned workers) {
  return simulate_batch_multi(f, {lambda}, start, cfg, workers)[0];
}

ProjectionEstimate estimate_projection(const std::vector<PathSample>& samples,
                                       const CircleGrid& grid, PathValue which,
                                       unsigned workers) {
  if (samples.empty())
    throw ValidationError("estimate_projection: empty sample set");
  if (workers == 0) workers = default_workers();
  const std::size_t n = grid.n;
  const std::size_t n_samp = samples.size();

  // flatten the per-sample data once; difference mode keeps only paths
  // where tau fired (the value vanishes on the rest)
  struct Row {
    double x, y, num, a, vr, vi;
  };
  std::vector<Row> rows;
  rows.reserve(n_samp);
  for (const PathSample& s : samples) {
    cplx v;
    switch (which) {
      case PathValue::stopped: v = s.stopped_value; break;
      case PathValue::terminal: v = s.terminal_value; break;
      case PathValue::difference:
        if (!s.tau_fired) continue;
        v = s.terminal_value - s.stopped_value;
        break;
    }
    const double nz = std::norm(s.exit_point);
    rows.push_back(Row{s.exit_point.real(), s.exit_point.imag(), 1.0 - nz,
                       1.0 + nz, v.real(), v.imag()});
  }

  std::vector<cplx> est(n);
  std::vector<double> se(n);
  const double inv_n = 1.0 / static_cast<double>(n_samp);
  parallel_blocks(n, 64, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t j = lo; j < hi; ++j) {
      const double th = grid.point(j);
      const double c = std::cos(th), s_ = std::sin(th);
      double sr = 0.0, si = 0.0, qr = 0.0, qi = 0.0;
      for (const Row& r : rows) {
        const double den = r.a - 2.0 * (c * r.x + s_ * r.y);
        const double p = r.num / den;
        const double wr = r.vr * p, wi = r.vi * p;
        sr += wr;
        si += wi;
        qr += wr * wr;
        qi += wi * wi;
      }
      est[j] = cplx{sr, si} * inv_n;
      if (n_samp > 1) {
        const double mr = sr * inv_n, mi = si * inv_n;
        const double var =
            (qr - static_cast<double>(n_samp) * mr * mr + qi -
             static_cast<double>(n_samp) * mi * mi) /
            static_cast<double>(n_samp - 1);
        se[j] = std::sqrt(std::max(0.0, var) * inv_n);
      }
    }
  });

  ProjectionEstimate out;
  out.fn = make_complex_fn(grid, std::move(est));
  out.std_error = std::move(se);
  return out;
}

ProjectionEstimate estimate_projection(const std::vector<PathSample>& samples,
                                       const CircleGrid& grid,
                                       bool use_stopped, unsigned workers) {
  return estimate_projection(
      samples, grid, use_stopped ? PathValue::stopped : PathValue::terminal,
      workers);
}

MeasureEstimate harmonic_measure(const std::function<bool(cplx)>& in_set,
                                 cplx start, const PathConfig& cfg,
                                 unsigned workers) {
  validate(cfg);
  if (std::abs(start) >= cfg.r_exit)
    throw ValidationError("harmonic_measure: |start| must be < r_exit");
  if (workers == 0) workers = default_workers();

  const double sqrt_dt = std::sqrt(cfg.dt);
  const double r2_exit = cfg.r_exit * cfg.r_exit;
  std::vector<std::uint8_t> hit(cfg.n_paths, 0);

  parallel_blocks(cfg.n_paths, kPathBlock, workers,
                  [&](std::size_t lo, std::size_t hi) {
                    for (std::size_t i = lo; i < hi; ++i) {
                      cplx z = start;
                      if (in_set(z)) {
                        hit[i] = 1;
                        continue;
                      }
                      for (std::uint64_t k = 0; k < cfg.max_steps; ++k) {
                        const GaussPair g = gauss_pair(cfg.seed, i, k);
                        z += cplx{sqrt_dt * g.g0, sqrt_dt * g.g1};
                        if (std::norm(z) >= r2_exit) break;
                        if (in_set(z)) {
                          hit[i] = 1;
                          break;
                        }
                      }
                    }
                  });

  std::size_t count = 0;
  for (std::uint8_t h : hit) count += h;
  MeasureEstimate m;
  m.n_samples = cfg.n_paths;
  m.value = static_cast<double>(count) / static_cast<double>(cfg.n_paths);
  if (cfg.n_paths > 1)
    m.std_error = std::sqrt(m.value * (1.0 - m.value) /
                            static_cast<double>(cfg.n_paths - 1));
  m.degenerate = (count == 0);
  return m;
}

namespace {
bool angle_in_arc(double ang, double lo, double hi) {
  const double tp = kTwoPi;
  ang = std::fmod(ang, tp);
  if (ang < 0) ang += tp;
  lo = std::fmod(lo, tp);
  if (lo < 0) lo += tp;
  hi = std::fmod(hi, tp);
  if (hi < 0) hi += tp;
  if (lo <= hi) return ang >= lo && ang <= hi;
  return ang >= lo || ang <= hi;
}
}  // namespace

MeasureEstimate exit_law_check(const std::vector<PathSample>& samples,
                               double arc_lo, double arc_hi) {
  if (samples.empty()) throw ValidationError("exit_law_check: no samples");
  if (arc_lo == arc_hi)
    throw ValidationError("exit_law_check: degenerate arc");
  std::size_t count = 0;
  for (const PathSample& s : samples) {
    const double ang = std::arg(s.exit_point);
    if (angle_in_arc(ang, arc_lo, arc_hi)) ++count;
  }
  MeasureEstimate m;
  m.n_samples = samples.size();
  m.value = static_cast<double>(count) / static_cast<double>(samples.size());
  if (samples.size() > 1)
    m.std_error = std::sqrt(m.value * (1.0 - m.value) /
                            static_cast<double>(samples.size() - 1));
  m.degenerate = (count == 0);
  return m;
}

double arc_poisson_mass(double arc_lo, double arc_hi, cplx start,
                        std::size_t quad_points) {
  double len = arc_hi - arc_lo;
  while (len < 0) len += kTwoPi;
  if (len == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < quad_points; ++i) {
    const double psi =
        arc_lo + len * (static_cast<double>(i) + 0.5) /
                     static_cast<double>(quad_points);
    acc += poisson_kernel(psi, start);
  }
  return acc * len / (static_cast<double>(quad_points) * kTwoPi);
}

ScalarEstimate balayage_at(const std::vector<PathSample>& samples,
                           double theta) {
  if (samples.empty()) throw ValidationError("balayage_at: no samples");
  double sum = 0.0, sumsq = 0.0;
  for (const PathSample& s : samples) {
    double w = 0.0;
    if (s.tau_fired) w = poisson_kernel(theta, s.tau_point);
    sum += w;
    sumsq += w * w;
  }
  const double n = static_cast<double>(samples.size());
  ScalarEstimate e;
  e.n_samples = samples.size();
  e.value = sum / n;
  if (samples.size() > 1)
    e.std_error =
        std::sqrt(std::max(0.0, (sumsq - n * e.value * e.value) / (n - 1.0)) /
                  n);
  return e;
}

ScalarEstimate balayage(const AnalyticFn& f, double lambda, double theta,
                        const PathConfig& cfg, unsigned workers) {
  if (!(lambda > std::abs(f.at_origin())))
    throw ValidationError(
        "balayage: lambda must exceed |F(0)| (start already inside the "
        "level domain)");
  const PathBatch b = simulate_batch(f, lambda, cplx{0.0, 0.0}, cfg, workers);
  return balayage_at(b.samples, theta);
}

TailReport tail_bound_check(const std::vector<PathSample>& samples,
                            double lambda,
                            const std::vector<double>& tail_grid) {
  if (samples.empty()) throw ValidationError("tail_bound_check: no samples");
  const double n = static_cast<double>(samples.size());

  double l_sum = 0.0, l_sq = 0.0, r_sum = 0.0, r_sq = 0.0, t_sq = 0.0;
  for (const PathSample& s : samples) {
    const double d = std::abs(s.terminal_value - s.stopped_value);
    const double r =
        s.f_star > lambda ? 2.0 * std::abs(s.terminal_value) : 0.0;
    l_sum += d;
    l_sq += d * d;
    r_sum += r;
    r_sq += r * r;
    t_sq += std::norm(s.terminal_value);
  }

  TailReport rep;
  rep.lhs = l_sum / n;
  rep.rhs = r_sum / n;
  rep.mean_sq_terminal = t_sq / n;
  if (samples.size() > 1) {
    rep.lhs_se = std::sqrt(
        std::max(0.0, (l_sq - n * rep.lhs * rep.lhs) / (n - 1.0)) / n);
    rep.rhs_se = std::sqrt(
        std::max(0.0, (r_sq - n * rep.rhs * rep.rhs) / (n - 1.0)) / n);
  }
  const double se_comb = std::hypot(rep.lhs_se, rep.rhs_se);
  rep.bound_ok = rep.lhs <= rep.rhs + 3.0 * se_comb + 1e-12;

  // tail of the running maximum over a level grid
  std::vector<double> grid = tail_grid;
  if (grid.empty()) {
    std::vector<double> fs;
    fs.reserve(samples.size());
    for (const PathSample& s : samples) fs.push_back(s.f_star);
    std::sort(fs.begin(), fs.end());
    const double q_lo = fs[static_cast<std::size_t>(0.50 * (n - 1.0))];
    const double hi_p = std::min(0.9975, 1.0 - 50.0 / n);
    const double q_hi = fs[static_cast<std::size_t>(hi_p * (n - 1.0))];
    if (q_hi > q_lo) {
      constexpr int kLevels = 8;
      for (int i = 0; i < kLevels; ++i)
        grid.push_back(q_lo + (q_hi - q_lo) * static_cast<double>(i) /
                                  (kLevels - 1));
    }
  }
  for (double lv : grid) {
    std::size_t c = 0;
    for (const PathSample& s : samples)
      if (s.f_star > lv) ++c;
    rep.tail_lambdas.push_back(lv);
    rep.tail_probs.push_back(static_cast<double>(c) / n);
  }
  return rep;
}

}  // namespace hmc
