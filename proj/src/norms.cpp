#include "mixnorm/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "mixnorm/errors.hpp"
#include "mixnorm/integrate.hpp"

namespace mixnorm {

namespace {

double pow_abs(double v, double e) {
  if (e == 1.0) return std::fabs(v);
  if (e == 2.0) return v * v;
  return std::pow(std::fabs(v), e);
}

}  // namespace

double mixed_norm(const GridFunction& f, const ExponentVector& p) {
  const Grid& g = f.grid();
  const int n = g.dim();
  if (p.size() != n) throw std::invalid_argument("mixed_norm: exponent dimension mismatch");

  // Collapse axis 0 first. With axis 0 slowest in the flat layout, the
  // remaining axes keep their relative strides after each collapse.
  std::size_t outer = static_cast<std::size_t>(g.resolution()[0]);
  std::size_t rest = g.size() / outer;

  std::vector<double> cur(f.values().begin(), f.values().end());
  for (std::size_t k = 0; k < cur.size(); ++k) cur[k] = pow_abs(cur[k], p[0]);

  for (int axis = 0; axis < n; ++axis) {
    const double h = g.spacing()[axis];
    std::vector<long double> acc(rest, 0.0L);
    for (std::size_t i = 0; i < outer; ++i) {
      const std::size_t base = i * rest;
      for (std::size_t r = 0; r < rest; ++r) acc[r] += cur[base + r];
    }
    cur.resize(rest);
    for (std::size_t r = 0; r < rest; ++r) cur[r] = static_cast<double>(acc[r]) * h;

    if (axis + 1 < n) {
      const double e = p[axis + 1] / p[axis];
      if (e != 1.0)
        for (std::size_t r = 0; r < rest; ++r) cur[r] = std::pow(cur[r], e);
      outer = static_cast<std::size_t>(g.resolution()[axis + 1]);
      rest /= outer;
    }
  }
  return std::pow(cur[0], 1.0 / p[n - 1]);
}

double classical_norm(const GridFunction& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("classical_norm: p must be >= 1");
  const std::span<const double> v = f.values();
  long double acc = 0.0L;
  for (double x : v) acc += pow_abs(x, p);
  const double integral = static_cast<double>(acc) * f.grid().cell_volume();
  return std::pow(integral, 1.0 / p);
}

double weighted_norm(const GridFunction& f, double p, const GridFunction& w) {
  if (!(p > 0.0)) throw std::invalid_argument("weighted_norm: p must be positive");
  if (!(f.grid() == w.grid())) throw std::invalid_argument("weighted_norm: grid mismatch");
  const std::span<const double> fv = f.values();
  const std::span<const double> wv = w.values();
  long double acc = 0.0L;
  for (std::size_t k = 0; k < fv.size(); ++k) {
    if (!(wv[k] > 0.0)) throw weight_error("weighted_norm: weight must be strictly positive");
    acc += pow_abs(fv[k], p) * wv[k];
  }
  const double integral = static_cast<double>(acc) * f.grid().cell_volume();
  return std::pow(integral, 1.0 / p);
}

double convexified_norm(const GridFunction& f, const ExponentVector& p, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("convexified_norm: r must be positive");
  std::vector<double> vals(f.size());
  for (std::size_t k = 0; k < vals.size(); ++k) vals[k] = pow_abs(f[k], r);
  const GridFunction fr(f.grid(), std::move(vals));
  return std::pow(mixed_norm(fr, p), 1.0 / r);
}

double holder_gap(const GridFunction& f, const GridFunction& g, const ExponentVector& p) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("holder_gap: grid mismatch");
  const std::span<const double> fv = f.values();
  const std::span<const double> gv = g.values();
  long double acc = 0.0L;
  for (std::size_t k = 0; k < fv.size(); ++k) acc += std::fabs(fv[k] * gv[k]);
  const double pairing = static_cast<double>(acc) * f.grid().cell_volume();
  return mixed_norm(f, p) * mixed_norm(g, p.dual()) - pairing;
}

double indicator_norm_formula(const Box& cube, const ExponentVector& p) {
  if (!cube.is_cube()) throw std::invalid_argument("indicator_norm_formula: box must be a cube");
  if (p.size() != cube.dim())
    throw std::invalid_argument("indicator_norm_formula: exponent dimension mismatch");
  const double n = static_cast<double>(cube.dim());
  return std::pow(cube.volume(), p.sum_reciprocals() / n);
}

}  // namespace mixnorm
