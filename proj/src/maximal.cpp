#include "hmc/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "hmc/errors.hpp"
#include "hmc/fit.hpp"

namespace hmc {

namespace {

// max over the circular window [j - m, j + m] for every j, O(n)
std::vector<double> circ_window_max(const std::vector<double>& v,
                                    std::size_t m) {
  const std::size_t n = v.size();
  if (m == 0) return v;
  if (2 * m + 1 >= n)
    return std::vector<double>(n, *std::max_element(v.begin(), v.end()));
  std::vector<double> out(n);
  auto ext = [&](std::size_t i) { return v[(i + n - m) % n]; };
  std::deque<std::size_t> dq;
  for (std::size_t i = 0; i < n + 2 * m; ++i) {
    const double val = ext(i);
    while (!dq.empty() && ext(dq.back()) <= val) dq.pop_back();
    dq.push_back(i);
    while (dq.front() + 2 * m < i) dq.pop_front();
    if (i >= 2 * m) out[i - 2 * m] = ext(dq.front());
  }
  return out;
}

// max over the trailing circular window of length len ending at j
std::vector<double> circ_trailing_max(const std::vector<double>& v,
                                      std::size_t len) {
  const std::size_t n = v.size();
  if (len <= 1) return v;
  if (len >= n)
    return std::vector<double>(n, *std::max_element(v.begin(), v.end()));
  std::vector<double> out(n);
  auto ext = [&](std::size_t i) { return v[(i + n - (len - 1)) % n]; };
  std::deque<std::size_t> dq;
  for (std::size_t i = 0; i < n + len - 1; ++i) {
    const double val = ext(i);
    while (!dq.empty() && ext(dq.back()) <= val) dq.pop_back();
    dq.push_back(i);
    while (dq.front() + len <= i) dq.pop_front();
    if (i + 1 >= len) out[i - (len - 1)] = ext(dq.front());
  }
  return out;
}

NontangentialMax cone_max(const AnalyticFn& f, const DiskGrid& disk,
                          double aperture, bool real_part) {
  if (!(aperture >= 1.0 && aperture <= 4.0))
    throw ValidationError("nontangential_max: aperture must be in [1, 4]");
  const CircleGrid& grid = disk.base;
  const std::size_t n = grid.n;

  auto sample = [&](cplx v) {
    return real_part ? std::abs(v.real()) : std::abs(v);
  };

  const BoundaryFn boundary = f.trace(grid);
  std::vector<double> best(n);
  for (std::size_t j = 0; j < n; ++j) best[j] = sample(boundary.values[j]);

  bool fallback = false;
  std::vector<double> ring(n);
  for (double r : disk.radii) {
    const BoundaryFn tr = f.damped(r).trace(grid);
    for (std::size_t j = 0; j < n; ++j) ring[j] = sample(tr.values[j]);
    // cone window: |z - e^{i theta}| <= aperture (1 - r) on the ring
    const double rhs =
        (1.0 + r * r - aperture * aperture * (1.0 - r) * (1.0 - r)) /
        (2.0 * r);
    const double half_width = std::acos(std::clamp(rhs, -1.0, 1.0));
    const std::size_t m =
        static_cast<std::size_t>(half_width / grid.cell_measure());
    if (m == 0) fallback = true;
    const std::vector<double> wmax = circ_window_max(ring, m);
    for (std::size_t j = 0; j < n; ++j) best[j] = std::max(best[j], wmax[j]);
  }

  NontangentialMax out;
  out.fn = make_real_fn(grid, best);
  out.radial_fallback = fallback;
  return out;
}

}  // namespace

DiskGrid make_disk_grid(const CircleGrid& base, std::size_t levels) {
  if (levels < 1 || levels > 12)
    throw ValidationError("make_disk_grid: levels must be in [1, 12]");
  DiskGrid d;
  d.base = base;
  for (std::size_t k = 1; k <= levels; ++k)
    d.radii.push_back(1.0 - std::ldexp(1.0, -static_cast<int>(k)));
  return d;
}

NontangentialMax nontangential_max(const AnalyticFn& f, const DiskGrid& disk,
                                   double aperture) {
  return cone_max(f, disk, aperture, false);
}

NontangentialMax nontangential_max_re(const AnalyticFn& f,
                                      const DiskGrid& disk, double aperture) {
  return cone_max(f, disk, aperture, true);
}

MaximalFn hardy_littlewood(const BoundaryFn& h) {
  check_boundary_fn(h);
  const std::size_t n = h.grid.n;

  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = std::abs(h.values[j]);
  std::vector<double> pre(2 * n + 1, 0.0);
  for (std::size_t j = 0; j < 2 * n; ++j) pre[j + 1] = pre[j] + w[j % n];

  MaximalFn out;
  if (n <= 8192) {
    // exact: every arc length, every circular offset
    std::vector<double> best(n, 0.0);
    std::vector<double> avg(n);
    for (std::size_t len = 1; len <= n; ++len) {
      const double inv = 1.0 / static_cast<double>(len);
      for (std::size_t l = 0; l < n; ++l) avg[l] = (pre[l + len] - pre[l]) * inv;
      const std::vector<double> tmax = circ_trailing_max(avg, len);
      for (std::size_t j = 0; j < n; ++j) best[j] = std::max(best[j], tmax[j]);
    }
    out.fn = make_real_fn(h.grid, best);
    out.exact = true;
  } else {
    // dyadic aligned arcs only
    std::vector<double> best = w;
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const double inv = 1.0 / static_cast<double>(len);
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t start = (j / len) * len;
        best[j] = std::max(best[j], (pre[start + len] - pre[start]) * inv);
      }
    }
    out.fn = make_real_fn(h.grid, best);
    out.exact = false;
  }
  return out;
}

GridMask level_set(const BoundaryFn& h, double lambda) {
  check_boundary_fn(h);
  if (h.kind != ValueKind::real)
    throw ValidationError("level_set: input must be real-kind");
  GridMask m = empty_mask(h.grid);
  for (std::size_t j = 0; j < h.grid.n; ++j)
    m.members[j] = h.values[j].real() > lambda ? 1 : 0;
  return m;
}

TailFit jn_distribution(const BoundaryFn& f_sharp,
                        const std::vector<double>& lambda_grid) {
  check_boundary_fn(f_sharp);
  if (lambda_grid.size() < 4)
    throw DataError("jn_distribution: need at least four levels");
  for (std::size_t i = 1; i < lambda_grid.size(); ++i)
    if (!(lambda_grid[i] > lambda_grid[i - 1]))
      throw ValidationError("jn_distribution: lambda grid must be increasing");

  TailFit fit;
  fit.lambdas = lambda_grid;
  std::vector<double> used_l;
  for (double lv : lambda_grid) {
    const double m = level_set(f_sharp, lv).measure();
    fit.measures.push_back(m);
    if (m > 0.0) {
      used_l.push_back(lv);
      fit.log_measures.push_back(std::log(m));
    } else {
      fit.saturated = true;
    }
  }
  if (used_l.size() < 4)
    throw DataError(
        "jn_distribution: fewer than four levels with nonempty level sets "
        "(input not BMO-like at this resolution or grid too coarse)");
  const LinearFit lf = fit_linear(used_l, fit.log_measures);
  fit.slope = lf.slope;
  fit.intercept = lf.intercept;
  fit.r2 = lf.r2;
  return fit;
}

Theorem3Report theorem3_pointwise_check(
    const BoundaryFn& f_trace, const BoundaryFn& g_trace,
    const BoundaryFn& f_sharp, double lambda,
    const std::vector<PathSample>& samples) {
  if (f_trace.grid.n != g_trace.grid.n || f_trace.grid.n != f_sharp.grid.n)
    throw ValidationError("theorem3_pointwise_check: grid mismatch");
  const std::size_t n = f_trace.grid.n;

  std::vector<double> residual(n);
  for (std::size_t j = 0; j < n; ++j)
    residual[j] = std::abs(f_trace.values[j] - g_trace.values[j]);

  Theorem3Report rep;
  const GridMask h_mask = level_set(f_sharp, lambda);
  if (h_mask.count() == 0) {
    rep.h_empty = true;
    rep.max_residual_h_empty =
        *std::max_element(residual.begin(), residual.end());
    return rep;
  }

  const MaximalFn mhl = hardy_littlewood(mask_indicator(h_mask));
  rep.ratios.resize(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double den =
        (std::abs(f_trace.values[j]) + lambda) * mhl.fn.values[j].real();
    rep.ratios[j] = den > 0.0 ? residual[j] / den : 0.0;
  }
  std::vector<double> sorted = rep.ratios;
  std::sort(sorted.begin(), sorted.end());
  rep.c_emp = sorted[static_cast<std::size_t>(
      0.99 * static_cast<double>(n - 1))];

  // Carleson-box diagnostic at the worst residual angle
  const std::size_t j_star = static_cast<std::size_t>(
      std::max_element(residual.begin(), residual.end()) - residual.begin());
  rep.probe_theta = f_trace.grid.point(j_star);
  if (!samples.empty()) {
    const double total = static_cast<double>(samples.size());
    for (int k = 0; k <= 10; ++k) {
      const double hh = std::ldexp(1.0, -k);
      std::size_t inside = 0;
      for (const PathSample& s : samples) {
        if (!s.tau_fired) continue;
        const double r = std::abs(s.tau_point);
        if (r < 1.0 - hh) continue;
        double dpsi = std::remainder(std::arg(s.tau_point) - rep.probe_theta,
                                     kTwoPi);
        if (std::abs(dpsi) <= hh) ++inside;
      }
      double grid_mass = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!h_mask[j]) continue;
        const double d =
            std::remainder(f_trace.grid.point(j) - rep.probe_theta, kTwoPi);
        if (std::abs(d) <= 3.0 * hh) grid_mass += f_trace.grid.cell_measure();
      }
      rep.boxes.push_back(CarlesonBox{
          hh, static_cast<double>(inside) / total / hh, grid_mass / hh});
    }
  }
  return rep;
}

GoodSetResult good_set_B(const BoundaryFn& f_sharp,
                         const BoundaryFn& f_boundary, double N_bound,
                         const CalibrationConstants& consts) {
  require_jn_constants(consts);
  if (!(N_bound > 0.0))
    throw ValidationError("good_set_B: N_bound must be positive");
  if (f_sharp.grid.n != f_boundary.grid.n)
    throw ValidationError("good_set_B: grid mismatch");
  const std::size_t n = f_sharp.grid.n;

  GoodSetResult res;
  // lambda = N * delta0 / (2 delta1) collapses to N once delta1 = delta0/2
  res.lambda = N_bound * consts.delta0 / (2.0 * consts.delta1);
  res.threshold = std::exp(-res.lambda * consts.delta1);

  res.H = level_set(f_sharp, res.lambda);
  GridMask g_mask = empty_mask(f_sharp.grid);
  for (std::size_t j = 0; j < n; ++j)
    g_mask.members[j] = std::abs(f_boundary.values[j]) < N_bound ? 1 : 0;
  if (g_mask.count() == 0)
    throw ValidationError("good_set_B: {|f| < N} is empty, raise N_bound");

  // J = union of arcs where the H density exceeds the threshold.  The scan
  // and hardy_littlewood below share the same prefix-sum/divide arithmetic,
  // so the resulting inequality on B is exact, not approximate.
  std::vector<double> pre(2 * n + 1, 0.0);
  for (std::size_t j = 0; j < 2 * n; ++j)
    pre[j + 1] = pre[j] + (res.H.members[j % n] ? 1.0 : 0.0);

  std::vector<int> cover(2 * n + 1, 0);
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t r_best = l;
    bool any = false;
    for (std::size_t r = l; r < l + n; ++r) {
      const double cnt = pre[r + 1] - pre[l];
      // same expression hardy_littlewood uses, so the two sides of the
      // density comparison round identically
      const double inv = 1.0 / static_cast<double>(r - l + 1);
      if (cnt * inv > res.threshold) {
        r_best = r;
        any = true;
      }
    }
    if (any) {
      cover[l] += 1;
      cover[r_best + 1] -= 1;
    }
  }
  res.J = empty_mask(f_sharp.grid);
  {
    std::vector<int> depth(2 * n, 0);
    int acc = 0;
    for (std::size_t j = 0; j < 2 * n; ++j) {
      acc += cover[j];
      depth[j] = acc;
    }
    for (std::size_t j = 0; j < n; ++j)
      res.J.members[j] = (depth[j] > 0 || depth[j + n] > 0) ? 1 : 0;
  }

  res.B = intersect(g_mask, complement(res.J));
  res.complement_measure = res.B.complement_measure();
  res.tail_term_g = complement(g_mask).measure();
  res.tail_term_j = res.J.measure();

  const MaximalFn mhl = hardy_littlewood(mask_indicator(res.H));
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    if (res.B[j]) worst = std::max(worst, mhl.fn.values[j].real());
  res.max_mhl_on_B = worst;
  if (worst > res.threshold)
    throw BoundViolation(
        "good_set_B: maximal function exceeds the density threshold on B "
        "(max " +
        std::to_string(worst) + " vs " + std::to_string(res.threshold) + ")");
  return res;
}

}  // namespace hmc
