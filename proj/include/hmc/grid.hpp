#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hmc/fft.hpp"

namespace hmc {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Uniform circle grid with n = 2^k sample points theta_j = 2*pi*j/n.
struct CircleGrid {
  std::size_t n = 0;

  double point(std::size_t j) const {
    return kTwoPi * static_cast<double>(j) / static_cast<double>(n);
  }
  double cell_measure() const { return kTwoPi / static_cast<double>(n); }

  bool operator==(const CircleGrid&) const = default;
};

// Validates 8 <= n <= 2^22 and n a power of two.
CircleGrid make_grid(std::size_t n);

enum class ValueKind { real, cplx };

// Sampled function on a circle grid.  kind == real guarantees the imaginary
// parts are exactly zero.
struct BoundaryFn {
  CircleGrid grid;
  std::vector<cplx> values;
  ValueKind kind = ValueKind::real;

  std::size_t size() const { return values.size(); }
  double real_at(std::size_t j) const { return values[j].real(); }
};

BoundaryFn make_real_fn(const CircleGrid& grid, const std::vector<double>& v);
BoundaryFn make_complex_fn(const CircleGrid& grid, std::vector<cplx> v);

// Checks the BoundaryFn invariants (length match; zero imaginary parts when
// kind == real) and throws ValidationError on failure.
void check_boundary_fn(const BoundaryFn& f);

double sup_norm(const BoundaryFn& f);
cplx mean_value(const BoundaryFn& f);

// Subset of grid cells with the induced measure (2*pi/n per cell).
struct GridMask {
  CircleGrid grid;
  std::vector<std::uint8_t> members;

  std::size_t count() const;
  double measure() const;             // in [0, 2*pi]
  double complement_measure() const;  // 2*pi - measure()
  bool operator[](std::size_t j) const { return members[j] != 0; }
};

GridMask full_mask(const CircleGrid& grid);
GridMask empty_mask(const CircleGrid& grid);
GridMask intersect(const GridMask& a, const GridMask& b);
GridMask complement(const GridMask& m);

// 0/1 indicator of the mask as a real-kind grid function.
BoundaryFn mask_indicator(const GridMask& m);

}  // namespace hmc
