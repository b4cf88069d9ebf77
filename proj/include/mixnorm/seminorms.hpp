#pragma once

#include "mixnorm/cube_family.hpp"
#include "mixnorm/exec.hpp"
#include "mixnorm/grid_function.hpp"

namespace mixnorm {

/// Bounded-mean-oscillation seminorm over the finite family:
/// max_Q avg_Q |b - b_Q|. Lower-bound semantics.
double bmo_norm(const GridFunction& b, const CubeFamily& family, Exec exec = Exec::parallel);

/// Pointwise Lipschitz quotient max over center pairs x != y of
/// |b(x)-b(y)| / |x-y|^beta, 0 < beta < 1. All pairs are swept when the
/// grid has at most `pair_budget` cells; larger grids use a deterministic
/// stride subsample of the centers.
double lipschitz_norm_pointwise(const GridFunction& b, double beta, Exec exec = Exec::parallel,
                                std::size_t pair_budget = 4096);

/// Oscillation-based Lipschitz seminorm, 1 <= q <= 64:
/// max_Q m(Q)^{-beta/n} (avg_Q |b - b_Q|^q)^{1/q}, with m(Q) the discrete
/// measure of Q; q = 1 reduces to the mean-oscillation form.
double lipschitz_norm_oscillation(const GridFunction& b, double beta, double q,
                                  const CubeFamily& family, Exec exec = Exec::parallel);

}  // namespace mixnorm
