#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hmc {

using cplx = std::complex<double>;

constexpr bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place radix-2 transform, length must be a power of two.
// sign = -1: forward (analysis), sign = +1: inverse.  Unnormalized; a
// forward/inverse round trip multiplies by n.
void fft_inplace(std::vector<cplx>& a, int sign);

}  // namespace hmc
