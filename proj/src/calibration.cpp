#include "hmc/calibration.hpp"

#include <cmath>

#include "hmc/errors.hpp"

namespace hmc {

void require_schedule_constants(const CalibrationConstants& c) {
  if (!(c.c1 > 0.0) || !(c.c2 > 0.0))
    throw ValidationError(
        "CalibrationConstants: c1 and c2 must be positive (run the tail "
        "calibration first)");
}

void require_jn_constants(const CalibrationConstants& c) {
  if (!(c.delta0 > 0.0) || !(c.C0 > 0.0) || !(c.delta1 > 0.0))
    throw ValidationError(
        "CalibrationConstants: delta0/C0/delta1 must be positive (run "
        "jn_distribution first)");
  if (std::abs(c.delta1 - c.delta0 / 2.0) > 1e-12 * c.delta0)
    throw ValidationError("CalibrationConstants: delta1 must equal delta0/2");
}

}  // namespace hmc
