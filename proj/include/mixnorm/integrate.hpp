#pragma once

#include <span>
#include <vector>

#include "mixnorm/geometry.hpp"
#include "mixnorm/grid_function.hpp"

namespace mixnorm {

/// Midpoint-rule integral of f over `region` (must lie inside the grid box):
/// sum of values at cell centers contained in the region, times cell volume.
/// Terms are accumulated in ascending flat-index order with an extended
/// accumulator, so the result is independent of thread count.
double riemann_integral(const GridFunction& f, const Box& region);

/// Integral over the whole grid box.
double riemann_integral(const GridFunction& f);

/// Sum of raw values (no cell-volume factor) over an index box given by
/// per-axis inclusive ranges, ascending order.
double cell_sum(std::span<const double> values, const Grid& grid,
                const std::vector<IndexRange>& ranges);

/// Sum of |values| over an index box.
double cell_sum_abs(std::span<const double> values, const Grid& grid,
                    const std::vector<IndexRange>& ranges);

/// Sum of |values - shift| over an index box (mean-oscillation helper).
double cell_sum_abs_dev(std::span<const double> values, const Grid& grid,
                        const std::vector<IndexRange>& ranges, double shift);

/// Number of cells in an index box.
std::size_t cell_count(const std::vector<IndexRange>& ranges);

/// Visit the index box row by row: fn(base, lo, hi) covers flat indices
/// base+lo .. base+hi, contiguous along the last axis. Rows come in
/// ascending flat order.
template <typename Fn>
void for_each_row(const Grid& grid, const std::vector<IndexRange>& ranges, Fn&& fn) {
  const int n = grid.dim();
  for (const IndexRange& r : ranges)
    if (r.empty()) return;
  const IndexRange last = ranges[static_cast<std::size_t>(n) - 1];
  if (n == 1) {
    fn(static_cast<std::size_t>(0), last.lo, last.hi);
    return;
  }
  std::vector<int> mi(n - 1);
  for (int a = 0; a < n - 1; ++a) mi[a] = ranges[a].lo;
  const std::vector<int>& res = grid.resolution();
  while (true) {
    std::size_t base = 0;
    for (int a = 0; a < n - 1; ++a)
      base = base * static_cast<std::size_t>(res[a]) + static_cast<std::size_t>(mi[a]);
    base *= static_cast<std::size_t>(res[n - 1]);
    fn(base, last.lo, last.hi);
    int a = n - 2;
    while (a >= 0) {
      if (++mi[a] <= ranges[a].hi) break;
      mi[a] = ranges[a].lo;
      --a;
    }
    if (a < 0) break;
  }
}

}  // namespace mixnorm
