#pragma once

#include <cstddef>
#include <vector>

namespace hmc {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t n_used = 0;
};

// Least squares of y against x.
LinearFit fit_linear(const std::vector<double>& x,
                     const std::vector<double>& y);

// Least squares of log(y) against x, silently dropping pairs with y <= 0;
// n_used reports how many points entered the fit.
LinearFit fit_loglinear(const std::vector<double>& x,
                        const std::vector<double>& y);

}  // namespace hmc
