#include "hmc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hmc/errors.hpp"

namespace hmc {

CircleGrid make_grid(std::size_t n) {
  if (!is_pow2(n))
    throw ValidationError("make_grid: n must be a power of two, got " +
                          std::to_string(n));
  if (n < 8 || n > (std::size_t{1} << 22))
    throw ValidationError("make_grid: n out of range [8, 2^22], got " +
                          std::to_string(n));
  return CircleGrid{n};
}

BoundaryFn make_real_fn(const CircleGrid& grid, const std::vector<double>& v) {
  if (v.size() != grid.n)
    throw ValidationError("make_real_fn: sample count does not match grid");
  BoundaryFn f;
  f.grid = grid;
  f.kind = ValueKind::real;
  f.values.reserve(v.size());
  for (double x : v) f.values.emplace_back(x, 0.0);
  return f;
}

BoundaryFn make_complex_fn(const CircleGrid& grid, std::vector<cplx> v) {
  if (v.size() != grid.n)
    throw ValidationError("make_complex_fn: sample count does not match grid");
  return BoundaryFn{grid, std::move(v), ValueKind::cplx};
}

void check_boundary_fn(const BoundaryFn& f) {
  if (f.values.size() != f.grid.n)
    throw ValidationError("BoundaryFn: sample count does not match grid");
  if (f.kind == ValueKind::real) {
    for (const cplx& v : f.values)
      if (v.imag() != 0.0)
        throw ValidationError("BoundaryFn: real kind with nonzero imag part");
  }
}

double sup_norm(const BoundaryFn& f) {
  double m = 0.0;
  for (const cplx& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

cplx mean_value(const BoundaryFn& f) {
  cplx s = std::accumulate(f.values.begin(), f.values.end(), cplx{0.0, 0.0});
  return s / static_cast<double>(f.values.size());
}

std::size_t GridMask::count() const {
  return static_cast<std::size_t>(
      std::count_if(members.begin(), members.end(),
                    [](std::uint8_t b) { return b != 0; }));
}

double GridMask::measure() const {
  return grid.cell_measure() * static_cast<double>(count());
}

double GridMask::complement_measure() const { return kTwoPi - measure(); }

GridMask full_mask(const CircleGrid& grid) {
  return GridMask{grid, std::vector<std::uint8_t>(grid.n, 1)};
}

GridMask empty_mask(const CircleGrid& grid) {
  return GridMask{grid, std::vector<std::uint8_t>(grid.n, 0)};
}

GridMask intersect(const GridMask& a, const GridMask& b) {
  if (a.grid.n != b.grid.n)
    throw ValidationError("intersect: mask grids differ");
  GridMask out = a;
  for (std::size_t j = 0; j < out.members.size(); ++j)
    out.members[j] = static_cast<std::uint8_t>(a.members[j] & b.members[j]);
  return out;
}

GridMask complement(const GridMask& m) {
  GridMask out = m;
  for (auto& b : out.members) b = static_cast<std::uint8_t>(b ? 0 : 1);
  return out;
}

BoundaryFn mask_indicator(const GridMask& m) {
  std::vector<double> v(m.grid.n, 0.0);
  for (std::size_t j = 0; j < m.grid.n; ++j) v[j] = m.members[j] ? 1.0 : 0.0;
  return make_real_fn(m.grid, v);
}

}  // namespace hmc
