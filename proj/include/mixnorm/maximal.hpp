#pragma once

#include <cstdint>
#include <vector>

#include "mixnorm/cube_family.hpp"
#include "mixnorm/exec.hpp"
#include "mixnorm/grid_function.hpp"

namespace mixnorm {

/// Output of a cube-family sweep. Values live on the input grid; `covered`
/// flags cells contained in at least one family cube (uncovered cells keep
/// value 0).
struct MaximalResult {
  GridFunction values;
  std::vector<std::uint8_t> covered;
  std::size_t uncovered_count = 0;
};

/// Hardy-Littlewood maximal function over the finite family: at each cell
/// center x, max over cubes Q containing x of the cell-average of |f| on Q.
/// Averages are discrete (mean over cell centers in Q), so constants are
/// reproduced exactly. Lower-bound semantics relative to the all-cubes sup.
MaximalResult maximal(const GridFunction& f, const CubeFamily& family,
                      Exec exec = Exec::parallel);

/// Sharp maximal function: max over Q of the mean of |f - f_Q| on Q.
MaximalResult sharp_maximal(const GridFunction& f, const CubeFamily& family,
                            Exec exec = Exec::parallel);

/// Fractional maximal function, 0 < alpha < n: max over Q of
/// m(Q)^{alpha/n - 1} * integral_Q |f|, with m(Q) the discrete measure of Q.
MaximalResult fractional_maximal(const GridFunction& f, double alpha, const CubeFamily& family,
                                 Exec exec = Exec::parallel);

/// Commutator of the fractional maximal function: at x, max over Q of
/// m(Q)^{alpha/n - 1} * integral_Q |b(x) - b(y)| |f(y)| dy.
MaximalResult fractional_maximal_commutator(const GridFunction& b, const GridFunction& f,
                                            double alpha, const CubeFamily& family,
                                            Exec exec = Exec::parallel);

}  // namespace mixnorm
