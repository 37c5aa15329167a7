#include "hmc/fit.hpp"

#include <cmath>

#include "hmc/errors.hpp"

namespace hmc {

LinearFit fit_linear(const std::vector<double>& x,
                     const std::vector<double>& y) {
  if (x.size() != y.size()) throw ValidationError("fit_linear: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw DataError("fit_linear: need at least two points");
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / static_cast<double>(n);
  const double my = sy / static_cast<double>(n);
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw DataError("fit_linear: degenerate abscissae");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  f.n_used = n;
  return f;
}

LinearFit fit_loglinear(const std::vector<double>& x,
                        const std::vector<double>& y) {
  if (x.size() != y.size())
    throw ValidationError("fit_loglinear: size mismatch");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] > 0.0) {
      xs.push_back(x[i]);
      ys.push_back(std::log(y[i]));
    }
  }
  LinearFit f = fit_linear(xs, ys);
  f.n_used = xs.size();
  return f;
}

}  // namespace hmc
