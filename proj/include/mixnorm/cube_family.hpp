#pragma once

#include <functional>
#include <vector>

#include "mixnorm/geometry.hpp"

namespace mixnorm {

/// Generation recipe for a finite cube family: dyadic levels over a cubical
/// root box plus nested diagonal translates. Level l splits the root into
/// 2^l cells per axis; translate t (1..T) shifts the level-l lattice by
/// side_l / 2^t along every axis, keeping only cubes fully inside the root.
/// Families generated this way are nested in both level_max and translates,
/// which makes family enlargement monotone.
struct CubeFamilyDescriptor {
  Box root;
  int level_min = 0;
  int level_max = 4;
  int translates = 1;
};

/// One shifted dyadic partition layer: cubes [anchor + j*side, anchor + (j+1)*side]
/// per axis, j = 0..count-1.
struct CubeLattice {
  int level = 0;
  int translate = 0;
  double side = 0.0;
  std::vector<double> anchor;
  int count_per_axis = 0;
};

/// Finite, deterministically enumerated family of equal-sided cubes. The
/// supremum over "all cubes" in the continuum definitions is approximated
/// from below by the maximum over this family.
class CubeFamily {
 public:
  explicit CubeFamily(CubeFamilyDescriptor d);

  static CubeFamily dyadic(const Box& root, int level_min, int level_max, int translates = 1);

  const CubeFamilyDescriptor& descriptor() const { return desc_; }
  const std::vector<CubeLattice>& lattices() const { return lattices_; }

  /// Materialized cube list (level asc, translate asc, lexicographic cell order).
  std::vector<Box> cubes() const;
  std::size_t cube_count() const;

  /// Visit every cube as a Box, in the materialized order.
  void for_each_cube(const std::function<void(const Box&)>& fn) const;

 private:
  CubeFamilyDescriptor desc_;
  std::vector<CubeLattice> lattices_;
};

/// Finite family of axis-parallel rectangles R = Q1 x Q2 formed as products
/// of cubes from two factor families living on complementary axis groups.
class RectangleFamily {
 public:
  RectangleFamily(const CubeFamily& factor1, const CubeFamily& factor2);

  const std::vector<Box>& rectangles() const { return rects_; }
  int split_axis() const { return split_axis_; }

 private:
  std::vector<Box> rects_;
  int split_axis_;  // number of axes taken by factor1
};

}  // namespace mixnorm
