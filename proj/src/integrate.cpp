#include "mixnorm/integrate.hpp"

#include <cmath>
#include <stdexcept>

namespace mixnorm {

double riemann_integral(const GridFunction& f, const Box& region) {
  const Grid& g = f.grid();
  if (!g.box().contains(region))
    throw std::invalid_argument("riemann_integral: region must lie inside the grid box");
  const std::vector<IndexRange> ranges = g.cell_ranges(region);
  return cell_sum(f.values(), g, ranges) * g.cell_volume();
}

double riemann_integral(const GridFunction& f) {
  const std::span<const double> v = f.values();
  long double acc = 0.0L;
  for (double x : v) acc += x;
  return static_cast<double>(acc) * f.grid().cell_volume();
}

double cell_sum(std::span<const double> values, const Grid& grid,
                const std::vector<IndexRange>& ranges) {
  long double acc = 0.0L;
  for_each_row(grid, ranges, [&](std::size_t base, int lo, int hi) {
    for (int k = lo; k <= hi; ++k) acc += values[base + static_cast<std::size_t>(k)];
  });
  return static_cast<double>(acc);
}

double cell_sum_abs(std::span<const double> values, const Grid& grid,
                    const std::vector<IndexRange>& ranges) {
  long double acc = 0.0L;
  for_each_row(grid, ranges, [&](std::size_t base, int lo, int hi) {
    for (int k = lo; k <= hi; ++k) acc += std::fabs(values[base + static_cast<std::size_t>(k)]);
  });
  return static_cast<double>(acc);
}

double cell_sum_abs_dev(std::span<const double> values, const Grid& grid,
                        const std::vector<IndexRange>& ranges, double shift) {
  long double acc = 0.0L;
  for_each_row(grid, ranges, [&](std::size_t base, int lo, int hi) {
    for (int k = lo; k <= hi; ++k)
      acc += std::fabs(values[base + static_cast<std::size_t>(k)] - shift);
  });
  return static_cast<double>(acc);
}

std::size_t cell_count(const std::vector<IndexRange>& ranges) {
  std::size_t c = 1;
  for (const IndexRange& r : ranges) {
    if (r.empty()) return 0;
    c *= static_cast<std::size_t>(r.count());
  }
  return c;
}

}  // namespace mixnorm
