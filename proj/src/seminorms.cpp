#include "mixnorm/seminorms.hpp"

#include <cmath>
#include <stdexcept>

#include "mixnorm/family_sweep.hpp"
#include "mixnorm/integrate.hpp"

namespace mixnorm {

double bmo_norm(const GridFunction& b, const CubeFamily& family, Exec exec) {
  if (family.cube_count() == 0) throw std::invalid_argument("bmo_norm: empty cube family");
  const Grid& grid = b.grid();
  return family_max(grid, family, exec,
                    [&](const std::vector<IndexRange>& ranges, std::size_t cells) {
                      const double m = static_cast<double>(cells);
                      const double mean = cell_sum(b.values(), grid, ranges) / m;
                      return cell_sum_abs_dev(b.values(), grid, ranges, mean) / m;
                    });
}

double lipschitz_norm_pointwise(const GridFunction& b, double beta, Exec exec,
                                std::size_t pair_budget) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("lipschitz_norm_pointwise: beta must lie in (0, 1)");
  const Grid& grid = b.grid();

  // Deterministic stride subsample once the grid exceeds the pair budget.
  std::size_t stride = 1;
  while ((grid.size() + stride - 1) / stride > pair_budget) ++stride;
  std::vector<std::size_t> pts;
  pts.reserve(grid.size() / stride + 1);
  for (std::size_t k = 0; k < grid.size(); k += stride) pts.push_back(k);

  const int n = grid.dim();
  std::vector<double> coords(pts.size() * static_cast<std::size_t>(n));
  std::vector<double> vals(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::vector<double> x = grid.center(pts[i]);
    for (int a = 0; a < n; ++a) coords[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)] = x[static_cast<std::size_t>(a)];
    vals[i] = b[pts[i]];
  }

  std::vector<double> row_max(pts.size(), 0.0);
  const double e2 = 0.5 * beta;
  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 16) if (par)
  for (long long i = 0; i < static_cast<long long>(pts.size()); ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    double best = 0.0;
    for (std::size_t j = ii + 1; j < pts.size(); ++j) {
      double r2 = 0.0;
      for (int a = 0; a < n; ++a) {
        const double d = coords[ii * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)] -
                         coords[j * static_cast<std::size_t>(n) + static_cast<std::size_t>(a)];
        r2 += d * d;
      }
      if (r2 == 0.0) continue;
      const double ratio = std::fabs(vals[ii] - vals[j]) / std::pow(r2, e2);
      if (ratio > best) best = ratio;
    }
    row_max[ii] = best;
  }
  double best = 0.0;
  for (double v : row_max)
    if (v > best) best = v;
  return best;
}

double lipschitz_norm_oscillation(const GridFunction& b, double beta, double q,
                                  const CubeFamily& family, Exec exec) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("lipschitz_norm_oscillation: beta must lie in (0, 1)");
  if (!(q >= 1.0 && q <= 64.0))
    throw std::invalid_argument("lipschitz_norm_oscillation: q must lie in [1, 64]");
  if (family.cube_count() == 0)
    throw std::invalid_argument("lipschitz_norm_oscillation: empty cube family");
  const Grid& grid = b.grid();
  const double n = static_cast<double>(grid.dim());
  const double cellvol = grid.cell_volume();
  return family_max(
      grid, family, exec, [&](const std::vector<IndexRange>& ranges, std::size_t cells) {
        const double m = static_cast<double>(cells);
        const double measure = m * cellvol;
        const double mean = cell_sum(b.values(), grid, ranges) / m;
        double osc;
        if (q == 1.0) {
          osc = cell_sum_abs_dev(b.values(), grid, ranges, mean) / m;
        } else {
          long double acc = 0.0L;
          for_each_row(grid, ranges, [&](std::size_t base, int lo, int hi) {
            for (int k = lo; k <= hi; ++k)
              acc += std::pow(std::fabs(b[base + static_cast<std::size_t>(k)] - mean), q);
          });
          osc = std::pow(static_cast<double>(acc) / m, 1.0 / q);
        }
        return std::pow(measure, -beta / n) * osc;
      });
}

}  // namespace mixnorm
