#include "hmc/fft.hpp"

#include <cmath>
#include <numbers>

#include "hmc/errors.hpp"

namespace hmc {

void fft_inplace(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw ValidationError("fft: length must be a power of two");
  if (n == 1) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // one table of n/2 roots, indexed by stride at each stage
  std::vector<cplx> w(n / 2);
  const double base = static_cast<double>(sign) * 2.0 * std::numbers::pi /
                      static_cast<double>(n);
  for (std::size_t j = 0; j < n / 2; ++j)
    w[j] = std::polar(1.0, base * static_cast<double>(j));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const cplx u = a[start + j];
        const cplx v = a[start + j + half] * w[j * stride];
        a[start + j] = u + v;
        a[start + j + half] = u - v;
      }
    }
  }
}

}  // namespace hmc
