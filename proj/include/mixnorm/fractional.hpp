#pragma once

#include <vector>

#include "mixnorm/exec.hpp"
#include "mixnorm/grid_function.hpp"

namespace mixnorm {

/// Quadrature policy for the singular kernel |x-y|^{alpha-n}. The coincident
/// cell is either replaced by the exact integral of the kernel over an
/// equal-volume ball centered at x (`analytic`, the default) or dropped
/// (`drop`), which underestimates the operator near the support.
struct KernelQuadrature {
  enum class Diagonal { analytic, drop };
  Diagonal diagonal = Diagonal::analytic;
};

/// Diagonal weight: integral of |x-y|^{alpha-n} over the equal-volume ball
/// around a cell center (reduces to the exact cell integral in 1D).
double diagonal_kernel_weight(const Grid& grid, double alpha);

/// Riesz-type fractional integral at every cell center:
///   I_alpha f(x_i) = sum_j |x_i - x_j|^{alpha-n} f(x_j) cellvol  (+ diagonal).
/// Center-to-center distances are formed from index differences, so the
/// kernel is a lookup into a difference table; sources are accumulated in
/// ascending flat order per target and targets are independent, making the
/// output bit-identical across thread counts.
GridFunction fractional_integral(const GridFunction& f, double alpha,
                                 const KernelQuadrature& quad = {}, Exec exec = Exec::parallel);

/// Same operator evaluated at arbitrary points (kernel from coordinates).
std::vector<double> fractional_integral_at(const GridFunction& f, double alpha,
                                           const std::vector<std::vector<double>>& points,
                                           const KernelQuadrature& quad = {},
                                           Exec exec = Exec::parallel);

/// Commutator [b, I_alpha] f(x) = sum_j (b(x) - b(x_j)) k(x, x_j) f(x_j) cellvol,
/// evaluated termwise (the coincident term vanishes).
GridFunction commutator_fractional(const GridFunction& b, const GridFunction& f, double alpha,
                                   const KernelQuadrature& quad = {}, Exec exec = Exec::parallel);

/// Absolute commutator I_{alpha,b}(f)(x) = sum_j |b(x) - b(x_j)| k(x, x_j) f(x_j) cellvol.
/// Dominates |[b, I_alpha] f| termwise when f >= 0.
GridFunction abs_commutator(const GridFunction& b, const GridFunction& f, double alpha,
                            const KernelQuadrature& quad = {}, Exec exec = Exec::parallel);

/// Straightforward per-pair reference implementations (no kernel table, no
/// threading); kept for testing the fast paths, which must agree bitwise.
GridFunction fractional_integral_reference(const GridFunction& f, double alpha,
                                           const KernelQuadrature& quad = {});
GridFunction commutator_fractional_reference(const GridFunction& b, const GridFunction& f,
                                             double alpha, const KernelQuadrature& quad = {});

}  // namespace mixnorm
