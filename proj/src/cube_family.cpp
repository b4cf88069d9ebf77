#include "mixnorm/cube_family.hpp"

#include <cmath>
#include <stdexcept>

namespace mixnorm {

CubeFamily::CubeFamily(CubeFamilyDescriptor d) : desc_(std::move(d)) {
  if (!desc_.root.is_cube())
    throw std::invalid_argument("CubeFamily: root box must be a cube");
  if (desc_.level_min < 0 || desc_.level_max < desc_.level_min)
    throw std::invalid_argument("CubeFamily: need 0 <= level_min <= level_max");
  if (desc_.translates < 0)
    throw std::invalid_argument("CubeFamily: translates must be >= 0");

  const int n = desc_.root.dim();
  const double root_side = desc_.root.side(0);
  for (int level = desc_.level_min; level <= desc_.level_max; ++level) {
    const int cells = 1 << level;
    const double side = root_side / static_cast<double>(cells);
    for (int t = 0; t <= desc_.translates; ++t) {
      const double delta = (t == 0) ? 0.0 : side / static_cast<double>(1 << t);
      const int count = (t == 0) ? cells : cells - 1;
      if (count <= 0) continue;
      CubeLattice lat;
      lat.level = level;
      lat.translate = t;
      lat.side = side;
      lat.count_per_axis = count;
      lat.anchor.resize(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a) lat.anchor[static_cast<std::size_t>(a)] = desc_.root.lower()[a] + delta;
      lattices_.push_back(std::move(lat));
    }
  }
}

CubeFamily CubeFamily::dyadic(const Box& root, int level_min, int level_max, int translates) {
  return CubeFamily(CubeFamilyDescriptor{root, level_min, level_max, translates});
}

void CubeFamily::for_each_cube(const std::function<void(const Box&)>& fn) const {
  const int n = desc_.root.dim();
  std::vector<int> j(static_cast<std::size_t>(n));
  std::vector<double> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (const CubeLattice& lat : lattices_) {
    std::fill(j.begin(), j.end(), 0);
    while (true) {
      for (int a = 0; a < n; ++a) {
        lo[static_cast<std::size_t>(a)] = lat.anchor[static_cast<std::size_t>(a)] +
                                          static_cast<double>(j[static_cast<std::size_t>(a)]) * lat.side;
        hi[static_cast<std::size_t>(a)] = lo[static_cast<std::size_t>(a)] + lat.side;
      }
      fn(Box(lo, hi));
      int a = n - 1;
      while (a >= 0) {
        if (++j[static_cast<std::size_t>(a)] < lat.count_per_axis) break;
        j[static_cast<std::size_t>(a)] = 0;
        --a;
      }
      if (a < 0) break;
    }
  }
}

std::vector<Box> CubeFamily::cubes() const {
  std::vector<Box> out;
  out.reserve(cube_count());
  for_each_cube([&](const Box& q) { out.push_back(q); });
  return out;
}

std::size_t CubeFamily::cube_count() const {
  const int n = desc_.root.dim();
  std::size_t total = 0;
  for (const CubeLattice& lat : lattices_) {
    std::size_t c = 1;
    for (int a = 0; a < n; ++a) c *= static_cast<std::size_t>(lat.count_per_axis);
    total += c;
  }
  return total;
}

RectangleFamily::RectangleFamily(const CubeFamily& factor1, const CubeFamily& factor2) {
  split_axis_ = factor1.descriptor().root.dim();
  const std::vector<Box> c1 = factor1.cubes();
  const std::vector<Box> c2 = factor2.cubes();
  rects_.reserve(c1.size() * c2.size());
  for (const Box& a : c1) {
    for (const Box& b : c2) {
      std::vector<double> lo(a.lower());
      std::vector<double> hi(a.upper());
      lo.insert(lo.end(), b.lower().begin(), b.lower().end());
      hi.insert(hi.end(), b.upper().begin(), b.upper().end());
      rects_.emplace_back(std::move(lo), std::move(hi));
    }
  }
}

}  // namespace mixnorm
