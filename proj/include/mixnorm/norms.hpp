#pragma once

#include "mixnorm/exponents.hpp"
#include "mixnorm/grid_function.hpp"

namespace mixnorm {

/// Iterated mixed norm: raise |f| to p_0, integrate over axis 0 (the
/// innermost variable), take power p_1/p_0, integrate over axis 1, ...,
/// finish with power 1/p_{n-1}. The axis order is fixed and part of the
/// contract; intermediate slices are kept as full arrays.
double mixed_norm(const GridFunction& f, const ExponentVector& p);

/// (integral |f|^p)^{1/p} over the whole grid box, p >= 1.
double classical_norm(const GridFunction& f, double p);

/// (integral |f|^p w)^{1/p}; w must be strictly positive on the same grid.
double weighted_norm(const GridFunction& f, double p, const GridFunction& w);

/// mixed_norm(|f|^r, p)^{1/r}; agrees with mixed_norm(f, r*p) whenever r*p
/// is a valid exponent vector.
double convexified_norm(const GridFunction& f, const ExponentVector& p, double r);

/// mixed_norm(f,p) * mixed_norm(g,dual(p)) - integral |f g|; nonnegative up
/// to rounding for every input pair.
double holder_gap(const GridFunction& f, const GridFunction& g, const ExponentVector& p);

/// Closed-form mixed norm of a cube indicator: |Q|^{(1/n) sum_i 1/p_i}.
double indicator_norm_formula(const Box& cube, const ExponentVector& p);

}  // namespace mixnorm
