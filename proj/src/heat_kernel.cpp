#include "mixnorm/heat_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace mixnorm {

double heat_kernel_fractional(double r, double alpha, int n, const HeatKernelQuadrature& quad) {
  if (!(r > 0.0)) throw std::invalid_argument("heat_kernel_fractional: r must be positive");
  if (n < 1) throw std::invalid_argument("heat_kernel_fractional: n must be >= 1");
  if (!(alpha > 0.0 && alpha < static_cast<double>(n)))
    throw std::invalid_argument("heat_kernel_fractional: alpha must lie in (0, n)");
  if (quad.panels < 2) throw std::invalid_argument("heat_kernel_fractional: panels must be >= 2");

  // Substituting u = r^2/(4t) gives
  //   K = (4 pi)^{-n/2} (r/2)^{alpha-n} / Gamma(alpha/2)
  //       * int_{u_min}^{u_max} e^{-u} u^{a-1} du,   a = (n - alpha)/2,
  // i.e. the r-dependence factors out and the remaining integral is a
  // truncated Gamma integral, which is what gets quadratured here.
  const double a = 0.5 * (static_cast<double>(n) - alpha);
  const double gamma_a = std::tgamma(a);

  const double u_min = std::pow(quad.tail_rel * a * gamma_a, 1.0 / a);
  double u_max = quad.u_max;
  if (a > 1.0) u_max += 10.0 * a;  // keep the upper tail negligible for larger a

  // v = u^a removes the integrable endpoint singularity of u^{a-1}:
  //   int e^{-u} u^{a-1} du = (1/a) int e^{-v^{1/a}} dv.
  const double v_lo = std::pow(u_min, a);
  const double v_hi = std::pow(u_max, a);
  const int m = quad.panels % 2 == 0 ? quad.panels : quad.panels + 1;
  const double dv = (v_hi - v_lo) / static_cast<double>(m);
  auto g = [&](double v) { return std::exp(-std::pow(v, 1.0 / a)); };

  long double simpson = g(v_lo) + g(v_hi);
  for (int k = 1; k < m; ++k) simpson += (k % 2 ? 4.0 : 2.0) * g(v_lo + k * dv);
  const double gamma_integral = static_cast<double>(simpson) * dv / 3.0 / a;

  const double prefactor = std::pow(4.0 * M_PI, -0.5 * static_cast<double>(n)) *
                           std::pow(r / 2.0, alpha - static_cast<double>(n)) /
                           std::tgamma(alpha / 2.0);
  return prefactor * gamma_integral;
}

}  // namespace mixnorm
