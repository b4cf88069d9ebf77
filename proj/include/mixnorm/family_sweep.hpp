#pragma once

#include <cstddef>
#include <vector>

#include "mixnorm/cube_family.hpp"
#include "mixnorm/exec.hpp"
#include "mixnorm/geometry.hpp"
#include "mixnorm/integrate.hpp"

namespace mixnorm {

namespace detail {

/// Precomputed cell ranges for one shifted dyadic partition. Cube index is
/// row-major over the per-axis lattice coordinates (axis 0 slowest).
struct LatticeRanges {
  int n = 0;
  int count = 0;                                 // cubes per axis
  std::vector<std::vector<IndexRange>> by_axis;  // [axis][j]

  LatticeRanges(const Grid& grid, const CubeLattice& lat) {
    n = grid.dim();
    count = lat.count_per_axis;
    by_axis.assign(static_cast<std::size_t>(n), {});
    for (int a = 0; a < n; ++a) {
      auto& row = by_axis[static_cast<std::size_t>(a)];
      row.resize(static_cast<std::size_t>(count));
      for (int j = 0; j < count; ++j) {
        const double lo = lat.anchor[static_cast<std::size_t>(a)] + j * lat.side;
        row[static_cast<std::size_t>(j)] = grid.axis_range(a, lo, lo + lat.side);
      }
    }
  }

  std::size_t cube_count() const {
    std::size_t c = 1;
    for (int a = 0; a < n; ++a) c *= static_cast<std::size_t>(count);
    return c;
  }

  std::vector<IndexRange> decode(std::size_t cube) const {
    std::vector<IndexRange> r(static_cast<std::size_t>(n));
    for (int a = n - 1; a >= 0; --a) {
      const std::size_t j = cube % static_cast<std::size_t>(count);
      cube /= static_cast<std::size_t>(count);
      r[static_cast<std::size_t>(a)] = by_axis[static_cast<std::size_t>(a)][j];
    }
    return r;
  }
};

}  // namespace detail

/// Maximum of a per-cube statistic over the whole family, skipping cubes
/// that contain no cell center. fn(ranges, cells) -> double. Cube work runs
/// in parallel; the max combine is exact, so the result is independent of
/// thread count.
template <typename Fn>
double family_max(const Grid& grid, const CubeFamily& family, Exec exec, Fn&& fn) {
  double best = 0.0;
  bool any = false;
  for (const CubeLattice& lat : family.lattices()) {
    const detail::LatticeRanges lr(grid, lat);
    const std::size_t nc = lr.cube_count();
    std::vector<double> vals(nc, 0.0);
    std::vector<std::uint8_t> nonempty(nc, 0);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (long long c = 0; c < static_cast<long long>(nc); ++c) {
      const std::vector<IndexRange> ranges = lr.decode(static_cast<std::size_t>(c));
      const std::size_t cells = cell_count(ranges);
      if (cells == 0) continue;
      nonempty[static_cast<std::size_t>(c)] = 1;
      vals[static_cast<std::size_t>(c)] = fn(ranges, cells);
    }
    for (std::size_t c = 0; c < nc; ++c) {
      if (!nonempty[c]) continue;
      if (!any || vals[c] > best) best = vals[c];
      any = true;
    }
  }
  return best;
}

}  // namespace mixnorm
