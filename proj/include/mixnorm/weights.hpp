#pragma once

#include <string>

#include "mixnorm/cube_family.hpp"
#include "mixnorm/exec.hpp"
#include "mixnorm/grid_function.hpp"

namespace mixnorm {

/// Strictly positive grid function with a provenance tag. Construction
/// rejects nonpositive values (weight_error).
struct Weight {
  GridFunction w;
  std::string provenance;

  explicit Weight(GridFunction values, std::string provenance_tag = "custom");
};

/// Muckenhoupt constant over the finite family, 1 < p < inf:
///   max_Q (avg_Q w) (avg_Q w^{1/(1-p)})^{p-1}.
/// Discrete averages; lower bound of the all-cubes constant; always >= 1.
double ap_constant(const Weight& w, double p, const CubeFamily& family,
                   Exec exec = Exec::parallel);

/// p = 1 constant: max_Q (avg_Q w) * max_{cells in Q} 1/w. The essential
/// supremum of 1/w is realized as a grid maximum.
double a1_constant(const Weight& w, const CubeFamily& family, Exec exec = Exec::parallel);

/// Rectangle (product-domain) constant over a rectangle family; p >= 1,
/// with p = 1 using the A_1-style formula.
double ap_star_constant(const Weight& w, double p, const RectangleFamily& family,
                        Exec exec = Exec::parallel);

/// Embedding weight [M(chi_ref)]^epsilon, 0 < epsilon < 1, clamped below by
/// floor_value at cells the family leaves uncovered. The reference cube
/// defaults to [0,1]^n.
Weight embedding_weight(const Grid& grid, double epsilon, const CubeFamily& family,
                        double floor_value = 1e-8);
Weight embedding_weight(const Grid& grid, double epsilon, const CubeFamily& family,
                        const Box& reference, double floor_value = 1e-8);

/// Truncated majorant iteration R_K h = sum_{k=0}^{K} M^k h / (2A)^k with
/// M^0 h = |h|. Satisfies |h| <= R_K h and M(R_K h) <= 2A R_{K+1} h exactly
/// on the discretization.
GridFunction rubio_de_francia(const GridFunction& h, double A, int K, const CubeFamily& family,
                              Exec exec = Exec::parallel);

}  // namespace mixnorm
