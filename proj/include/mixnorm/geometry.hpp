#pragma once

#include <cstddef>
#include <vector>

namespace mixnorm {

/// Axis-parallel box [lower_0, upper_0] x ... x [lower_{n-1}, upper_{n-1}].
/// Cubes are boxes with equal side lengths.
class Box {
 public:
  Box(std::vector<double> lower, std::vector<double> upper);

  /// Cube centered at `center` with side length `side` (all axes equal).
  static Box cube(const std::vector<double>& center, double side);
  /// Cube [0, side]^n anchored at the origin corner.
  static Box unit_anchored(int dim, double side = 1.0);

  int dim() const { return static_cast<int>(lower_.size()); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double side(int axis) const { return upper_[axis] - lower_[axis]; }
  double volume() const;

  /// Equal side lengths up to relative tolerance.
  bool is_cube(double rel_tol = 1e-12) const;

  /// Closed containment of a point.
  bool contains(const std::vector<double>& x) const;
  /// Closed containment of another box.
  bool contains(const Box& inner) const;

  bool operator==(const Box& o) const { return lower_ == o.lower_ && upper_ == o.upper_; }

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Per-axis inclusive index range into a grid; empty() when no cell qualifies.
struct IndexRange {
  int lo = 0;
  int hi = -1;  // inclusive
  bool empty() const { return hi < lo; }
  int count() const { return empty() ? 0 : hi - lo + 1; }
};

/// Uniform rectangular grid of cell centers over a box.
/// Flat storage is row-major with axis 0 slowest: flat = ((i0*R1 + i1)*R2 + ...).
class Grid {
 public:
  Grid(Box box, std::vector<int> resolution);

  const Box& box() const { return box_; }
  int dim() const { return box_.dim(); }
  const std::vector<int>& resolution() const { return res_; }
  const std::vector<double>& spacing() const { return spacing_; }
  std::size_t size() const { return total_; }
  double cell_volume() const { return cell_volume_; }

  /// Center coordinate of cell k along one axis: lower + (k + 0.5) * spacing.
  double center(int axis, int k) const {
    return box_.lower()[axis] + (static_cast<double>(k) + 0.5) * spacing_[axis];
  }
  std::vector<double> center(std::size_t flat) const;

  std::size_t flat_index(const std::vector<int>& multi) const;
  std::vector<int> multi_index(std::size_t flat) const;

  /// Inclusive range of cell indices along `axis` whose centers lie in [a, b]
  /// (closed on both ends, decided by comparing actual center coordinates).
  IndexRange axis_range(int axis, double a, double b) const;
  /// Per-axis ranges of cells whose centers lie in `region`.
  std::vector<IndexRange> cell_ranges(const Box& region) const;

  bool operator==(const Grid& o) const { return box_ == o.box_ && res_ == o.res_; }

 private:
  Box box_;
  std::vector<int> res_;
  std::vector<double> spacing_;
  std::size_t total_;
  double cell_volume_;
};

Grid make_grid(const Box& box, const std::vector<int>& resolution);

}  // namespace mixnorm
