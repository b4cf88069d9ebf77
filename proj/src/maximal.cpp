#include "mixnorm/maximal.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "mixnorm/family_sweep.hpp"
#include "mixnorm/integrate.hpp"

namespace mixnorm {

namespace {

using detail::LatticeRanges;

// Sweep all family cubes with a per-cube scalar statistic; scatter the
// running max into `out`. Per-cube work runs in parallel, the scatter is a
// fixed-order serial pass, so results do not depend on thread count.
template <typename StatFn>
void sweep_scalar(const GridFunction& f, const CubeFamily& family, Exec exec, StatFn&& stat,
                  std::vector<double>& out, std::vector<std::uint8_t>& covered) {
  const Grid& grid = f.grid();
  for (const CubeLattice& lat : family.lattices()) {
    const LatticeRanges lr(grid, lat);
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
      vals[static_cast<std::size_t>(c)] = stat(ranges, cells);
    }

    for (std::size_t c = 0; c < nc; ++c) {
      if (!nonempty[c]) continue;
      const std::vector<IndexRange> ranges = lr.decode(c);
      const double v = vals[c];
      for_each_row(grid, ranges, [&](std::size_t base, int klo, int khi) {
        for (int k = klo; k <= khi; ++k) {
          const std::size_t idx = base + static_cast<std::size_t>(k);
          if (v > out[idx]) out[idx] = v;
          covered[idx] = 1;
        }
      });
    }
  }
}

MaximalResult finish(const Grid& grid, std::vector<double> out, std::vector<std::uint8_t> covered) {
  std::size_t uncovered = 0;
  for (std::uint8_t c : covered)
    if (!c) ++uncovered;
  MaximalResult r{GridFunction(grid, std::move(out)), std::move(covered), uncovered};
  return r;
}

void check_family(const CubeFamily& family) {
  if (family.cube_count() == 0)
    throw std::invalid_argument("maximal operators: cube family is empty");
}

}  // namespace

MaximalResult maximal(const GridFunction& f, const CubeFamily& family, Exec exec) {
  check_family(family);
  const Grid& grid = f.grid();
  std::vector<double> out(grid.size(), 0.0);
  std::vector<std::uint8_t> covered(grid.size(), 0);
  sweep_scalar(
      f, family, exec,
      [&](const std::vector<IndexRange>& ranges, std::size_t cells) {
        return cell_sum_abs(f.values(), grid, ranges) / static_cast<double>(cells);
      },
      out, covered);
  return finish(grid, std::move(out), std::move(covered));
}

MaximalResult sharp_maximal(const GridFunction& f, const CubeFamily& family, Exec exec) {
  check_family(family);
  const Grid& grid = f.grid();
  std::vector<double> out(grid.size(), 0.0);
  std::vector<std::uint8_t> covered(grid.size(), 0);
  sweep_scalar(
      f, family, exec,
      [&](const std::vector<IndexRange>& ranges, std::size_t cells) {
        const double mean = cell_sum(f.values(), grid, ranges) / static_cast<double>(cells);
        return cell_sum_abs_dev(f.values(), grid, ranges, mean) / static_cast<double>(cells);
      },
      out, covered);
  return finish(grid, std::move(out), std::move(covered));
}

MaximalResult fractional_maximal(const GridFunction& f, double alpha, const CubeFamily& family,
                                 Exec exec) {
  check_family(family);
  const Grid& grid = f.grid();
  const double n = static_cast<double>(grid.dim());
  if (!(alpha > 0.0 && alpha < n))
    throw std::invalid_argument("fractional_maximal: alpha must lie in (0, n)");
  const double cellvol = grid.cell_volume();
  std::vector<double> out(grid.size(), 0.0);
  std::vector<std::uint8_t> covered(grid.size(), 0);
  sweep_scalar(
      f, family, exec,
      [&](const std::vector<IndexRange>& ranges, std::size_t cells) {
        const double measure = static_cast<double>(cells) * cellvol;
        const double avg = cell_sum_abs(f.values(), grid, ranges) / static_cast<double>(cells);
        return std::pow(measure, alpha / n) * avg;
      },
      out, covered);
  return finish(grid, std::move(out), std::move(covered));
}

MaximalResult fractional_maximal_commutator(const GridFunction& b, const GridFunction& f,
                                            double alpha, const CubeFamily& family, Exec exec) {
  check_family(family);
  const Grid& grid = f.grid();
  if (!(b.grid() == grid))
    throw std::invalid_argument("fractional_maximal_commutator: b and f must share a grid");
  const double n = static_cast<double>(grid.dim());
  if (!(alpha > 0.0 && alpha < n))
    throw std::invalid_argument("fractional_maximal_commutator: alpha must lie in (0, n)");
  const double cellvol = grid.cell_volume();

  std::vector<double> out(grid.size(), 0.0);
  std::vector<std::uint8_t> covered(grid.size(), 0);

  for (const CubeLattice& lat : family.lattices()) {
    const LatticeRanges lr(grid, lat);
    const std::size_t nc = lr.cube_count();
    std::vector<std::vector<std::size_t>> cube_cells(nc);
    std::vector<std::vector<double>> cube_vals(nc);

    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (long long c = 0; c < static_cast<long long>(nc); ++c) {
      const std::vector<IndexRange> ranges = lr.decode(static_cast<std::size_t>(c));
      std::vector<std::size_t>& cells = cube_cells[static_cast<std::size_t>(c)];
      for_each_row(grid, ranges, [&](std::size_t base, int klo, int khi) {
        for (int k = klo; k <= khi; ++k) cells.push_back(base + static_cast<std::size_t>(k));
      });
      if (cells.empty()) continue;
      const double measure = static_cast<double>(cells.size()) * cellvol;
      const double scale = std::pow(measure, alpha / n) / static_cast<double>(cells.size());
      std::vector<double>& vals = cube_vals[static_cast<std::size_t>(c)];
      vals.resize(cells.size());
      for (std::size_t xi = 0; xi < cells.size(); ++xi) {
        const double bx = b[cells[xi]];
        long double acc = 0.0L;
        for (std::size_t yi = 0; yi < cells.size(); ++yi)
          acc += std::fabs(bx - b[cells[yi]]) * std::fabs(f[cells[yi]]);
        vals[xi] = scale * static_cast<double>(acc);
      }
    }

    for (std::size_t c = 0; c < nc; ++c) {
      const std::vector<std::size_t>& cells = cube_cells[c];
      const std::vector<double>& vals = cube_vals[c];
      for (std::size_t xi = 0; xi < cells.size(); ++xi) {
        if (vals[xi] > out[cells[xi]]) out[cells[xi]] = vals[xi];
        covered[cells[xi]] = 1;
      }
    }
  }
  return finish(grid, std::move(out), std::move(covered));
}

}  // namespace mixnorm
