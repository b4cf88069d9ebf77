#pragma once

namespace mixnorm {

/// Quadrature controls for the Gaussian-semigroup kernel. The time integral
/// is transformed to u = r^2/(4t); the u-integral runs over [u_min, u_max]
/// where u_min is chosen so the lower Gamma tail is below tail_rel times the
/// full integral (bound: integral_0^u e^{-s} s^{a-1} ds <= u^a / a) and
/// u_max bounds the upper tail by u_max^{a-1} e^{-u_max}. The integrand is
/// smoothed with the further substitution v = u^a before composite Simpson.
struct HeatKernelQuadrature {
  double u_max = 50.0;
  double tail_rel = 1e-12;
  int panels = 4096;
};

/// Kernel of the fractional power of the heat semigroup for L = -Laplacian,
/// evaluated at separation r > 0 in dimension n:
///   K_alpha(r) = (1/Gamma(alpha/2)) int_0^inf (4 pi t)^{-n/2}
///                e^{-r^2/(4t)} t^{alpha/2 - 1} dt.
double heat_kernel_fractional(double r, double alpha, int n,
                              const HeatKernelQuadrature& quad = {});

}  // namespace mixnorm
