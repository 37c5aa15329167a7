#pragma once

#include <limits>

namespace hmc {

// Empirical stand-ins for the constants the existence proofs leave
// unspecified.  c1/c2 drive the correction schedule (fitted from the tail
// of the running maximum), delta0/C0 describe the level-set tail of the
// nontangential maximal function (fitted by jn_distribution), delta1 is
// pinned to delta0/2 and c3 aliases delta1.  C_bgs is the harmonic-measure
// vs maximal-function comparison constant.
struct CalibrationConstants {
  double c1 = std::numeric_limits<double>::quiet_NaN();
  double c2 = std::numeric_limits<double>::quiet_NaN();
  double c3 = std::numeric_limits<double>::quiet_NaN();
  double delta0 = std::numeric_limits<double>::quiet_NaN();
  double C0 = std::numeric_limits<double>::quiet_NaN();
  double delta1 = std::numeric_limits<double>::quiet_NaN();
  double C_bgs = std::numeric_limits<double>::quiet_NaN();

  void set_jn_tail(double d0, double c0) {
    delta0 = d0;
    C0 = c0;
    delta1 = d0 / 2.0;
    c3 = delta1;
  }
};

void require_schedule_constants(const CalibrationConstants& c);
void require_jn_constants(const CalibrationConstants& c);

}  // namespace hmc
