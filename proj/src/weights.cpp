#include "mixnorm/weights.hpp"

#include <cmath>
#include <stdexcept>

#include "mixnorm/errors.hpp"
#include "mixnorm/family_sweep.hpp"
#include "mixnorm/integrate.hpp"
#include "mixnorm/maximal.hpp"

namespace mixnorm {

namespace {

double cell_min(std::span<const double> values, const Grid& grid,
                const std::vector<IndexRange>& ranges) {
  double best = std::numeric_limits<double>::infinity();
  for_each_row(grid, ranges, [&](std::size_t base, int lo, int hi) {
    for (int k = lo; k <= hi; ++k) {
      const double v = values[base + static_cast<std::size_t>(k)];
      if (v < best) best = v;
    }
  });
  return best;
}

}  // namespace

Weight::Weight(GridFunction values, std::string provenance_tag)
    : w(std::move(values)), provenance(std::move(provenance_tag)) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!(w[k] > 0.0))
      throw weight_error("Weight: values must be strictly positive (cell " + std::to_string(k) +
                         ")");
}

double ap_constant(const Weight& w, double p, const CubeFamily& family, Exec exec) {
  if (!(p > 1.0))
    throw std::invalid_argument("ap_constant: p must be > 1 (use a1_constant for p = 1)");
  const Grid& grid = w.w.grid();
  std::vector<double> recip(w.w.size());
  const double e = 1.0 / (1.0 - p);
  for (std::size_t k = 0; k < recip.size(); ++k) recip[k] = std::pow(w.w[k], e);
  return family_max(grid, family, exec,
                    [&](const std::vector<IndexRange>& ranges, std::size_t cells) {
                      const double m = static_cast<double>(cells);
                      const double avg_w = cell_sum(w.w.values(), grid, ranges) / m;
                      const double avg_r = cell_sum(recip, grid, ranges) / m;
                      return avg_w * std::pow(avg_r, p - 1.0);
                    });
}

double a1_constant(const Weight& w, const CubeFamily& family, Exec exec) {
  const Grid& grid = w.w.grid();
  return family_max(grid, family, exec,
                    [&](const std::vector<IndexRange>& ranges, std::size_t cells) {
                      const double m = static_cast<double>(cells);
                      const double avg_w = cell_sum(w.w.values(), grid, ranges) / m;
                      return avg_w / cell_min(w.w.values(), grid, ranges);
                    });
}

double ap_star_constant(const Weight& w, double p, const RectangleFamily& family, Exec exec) {
  if (!(p >= 1.0)) throw std::invalid_argument("ap_star_constant: p must be >= 1");
  const Grid& grid = w.w.grid();
  const std::vector<Box>& rects = family.rectangles();
  if (rects.empty()) throw std::invalid_argument("ap_star_constant: empty rectangle family");

  std::vector<double> recip;
  if (p > 1.0) {
    recip.resize(w.w.size());
    const double e = 1.0 / (1.0 - p);
    for (std::size_t k = 0; k < recip.size(); ++k) recip[k] = std::pow(w.w[k], e);
  }

  std::vector<double> vals(rects.size(), 0.0);
  std::vector<std::uint8_t> nonempty(rects.size(), 0);
  const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
  for (long long r = 0; r < static_cast<long long>(rects.size()); ++r) {
    const std::vector<IndexRange> ranges = grid.cell_ranges(rects[static_cast<std::size_t>(r)]);
    const std::size_t cells = cell_count(ranges);
    if (cells == 0) continue;
    nonempty[static_cast<std::size_t>(r)] = 1;
    const double m = static_cast<double>(cells);
    const double avg_w = cell_sum(w.w.values(), grid, ranges) / m;
    if (p > 1.0)
      vals[static_cast<std::size_t>(r)] =
          avg_w * std::pow(cell_sum(recip, grid, ranges) / m, p - 1.0);
    else
      vals[static_cast<std::size_t>(r)] = avg_w / cell_min(w.w.values(), grid, ranges);
  }

  double best = 0.0;
  bool any = false;
  for (std::size_t r = 0; r < rects.size(); ++r) {
    if (!nonempty[r]) continue;
    if (!any || vals[r] > best) best = vals[r];
    any = true;
  }
  if (!any) throw std::invalid_argument("ap_star_constant: no rectangle contains a cell center");
  return best;
}

Weight embedding_weight(const Grid& grid, double epsilon, const CubeFamily& family,
                        double floor_value) {
  return embedding_weight(grid, epsilon, family, Box::unit_anchored(grid.dim()), floor_value);
}

Weight embedding_weight(const Grid& grid, double epsilon, const CubeFamily& family,
                        const Box& reference, double floor_value) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("embedding_weight: epsilon must lie in (0, 1)");
  if (!grid.box().contains(reference))
    throw std::invalid_argument("embedding_weight: reference cube must lie inside the grid box");
  const GridFunction chi = sample(FnSpec::indicator(reference), grid);
  const MaximalResult m = maximal(chi, family);
  std::vector<double> vals(m.values.size());
  for (std::size_t k = 0; k < vals.size(); ++k) {
    const double v = std::pow(m.values[k], epsilon);
    vals[k] = std::max(v, floor_value);
  }
  return Weight(GridFunction(grid, std::move(vals)),
                "embedding(" + std::to_string(epsilon) + ")");
}

GridFunction rubio_de_francia(const GridFunction& h, double A, int K, const CubeFamily& family,
                              Exec exec) {
  if (!(A > 0.0)) throw std::invalid_argument("rubio_de_francia: A must be positive");
  if (K < 0) throw std::invalid_argument("rubio_de_francia: K must be >= 0");

  std::vector<double> acc(h.size());
  std::vector<double> iter(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    iter[k] = std::fabs(h[k]);
    acc[k] = iter[k];
  }
  GridFunction current(h.grid(), iter);
  double scale = 1.0;
  for (int k = 1; k <= K; ++k) {
    current = maximal(current, family, exec).values;
    scale /= 2.0 * A;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += scale * current[i];
  }
  return GridFunction(h.grid(), std::move(acc));
}

}  // namespace mixnorm
