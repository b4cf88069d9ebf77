#include "mixnorm/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mixnorm {

Box::Box(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size())
    throw std::invalid_argument("Box: lower/upper must be nonempty and of equal dimension");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i]))
      throw std::invalid_argument("Box: lower[" + std::to_string(i) + "] must be < upper[" +
                                  std::to_string(i) + "]");
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
      throw std::invalid_argument("Box: bounds must be finite");
  }
}

Box Box::cube(const std::vector<double>& center, double side) {
  if (!(side > 0.0)) throw std::invalid_argument("Box::cube: side must be positive");
  std::vector<double> lo(center.size()), hi(center.size());
  for (std::size_t i = 0; i < center.size(); ++i) {
    lo[i] = center[i] - side / 2.0;
    hi[i] = center[i] + side / 2.0;
  }
  return Box(std::move(lo), std::move(hi));
}

Box Box::unit_anchored(int dim, double side) {
  if (dim < 1) throw std::invalid_argument("Box::unit_anchored: dim must be >= 1");
  return Box(std::vector<double>(dim, 0.0), std::vector<double>(dim, side));
}

double Box::volume() const {
  double v = 1.0;
  for (int a = 0; a < dim(); ++a) v *= side(a);
  return v;
}

bool Box::is_cube(double rel_tol) const {
  const double s0 = side(0);
  for (int a = 1; a < dim(); ++a)
    if (std::fabs(side(a) - s0) > rel_tol * std::fabs(s0)) return false;
  return true;
}

bool Box::contains(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim()) return false;
  for (int a = 0; a < dim(); ++a)
    if (x[a] < lower_[a] || x[a] > upper_[a]) return false;
  return true;
}

bool Box::contains(const Box& inner) const {
  if (inner.dim() != dim()) return false;
  for (int a = 0; a < dim(); ++a)
    if (inner.lower()[a] < lower_[a] || inner.upper()[a] > upper_[a]) return false;
  return true;
}

Grid::Grid(Box box, std::vector<int> resolution) : box_(std::move(box)), res_(std::move(resolution)) {
  if (static_cast<int>(res_.size()) != box_.dim())
    throw std::invalid_argument("Grid: resolution dimension mismatch");
  total_ = 1;
  spacing_.resize(res_.size());
  cell_volume_ = 1.0;
  for (std::size_t a = 0; a < res_.size(); ++a) {
    if (res_[a] < 2)
      throw std::invalid_argument("Grid: resolution must be >= 2 per axis, got " +
                                  std::to_string(res_[a]));
    spacing_[a] = (box_.upper()[a] - box_.lower()[a]) / static_cast<double>(res_[a]);
    total_ *= static_cast<std::size_t>(res_[a]);
    cell_volume_ *= spacing_[a];
  }
}

std::vector<double> Grid::center(std::size_t flat) const {
  std::vector<double> x(res_.size());
  const std::vector<int> mi = multi_index(flat);
  for (std::size_t a = 0; a < res_.size(); ++a) x[a] = center(static_cast<int>(a), mi[a]);
  return x;
}

std::size_t Grid::flat_index(const std::vector<int>& multi) const {
  std::size_t flat = 0;
  for (std::size_t a = 0; a < res_.size(); ++a)
    flat = flat * static_cast<std::size_t>(res_[a]) + static_cast<std::size_t>(multi[a]);
  return flat;
}

std::vector<int> Grid::multi_index(std::size_t flat) const {
  std::vector<int> mi(res_.size());
  for (std::size_t a = res_.size(); a-- > 0;) {
    mi[a] = static_cast<int>(flat % static_cast<std::size_t>(res_[a]));
    flat /= static_cast<std::size_t>(res_[a]);
  }
  return mi;
}

IndexRange Grid::axis_range(int axis, double a, double b) const {
  const int n = res_[axis];
  const double lo = box_.lower()[axis];
  const double h = spacing_[axis];
  // Initial guess from the closed-form inverse, then fix up against the
  // actual center coordinates so boundary hits are decided exactly.
  int klo = static_cast<int>(std::ceil((a - lo) / h - 0.5));
  int khi = static_cast<int>(std::floor((b - lo) / h - 0.5));
  auto c = [&](int k) { return lo + (static_cast<double>(k) + 0.5) * h; };
  while (klo > 0 && c(klo - 1) >= a) --klo;
  while (klo < n && c(klo) < a) ++klo;
  while (khi < n - 1 && c(khi + 1) <= b) ++khi;
  while (khi >= 0 && c(khi) > b) --khi;
  IndexRange r;
  r.lo = std::max(klo, 0);
  r.hi = std::min(khi, n - 1);
  return r;
}

std::vector<IndexRange> Grid::cell_ranges(const Box& region) const {
  if (region.dim() != dim()) throw std::invalid_argument("Grid::cell_ranges: dimension mismatch");
  std::vector<IndexRange> out(res_.size());
  for (int a = 0; a < dim(); ++a) out[a] = axis_range(a, region.lower()[a], region.upper()[a]);
  return out;
}

Grid make_grid(const Box& box, const std::vector<int>& resolution) { return Grid(box, resolution); }

}  // namespace mixnorm
