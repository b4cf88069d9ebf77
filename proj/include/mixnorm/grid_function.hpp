#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mixnorm/geometry.hpp"

namespace mixnorm {

/// Real-valued samples at the cell centers of a grid. Values are validated
/// finite at construction and immutable afterwards; sharing across threads
/// is safe.
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t flat) const { return values_[flat]; }
  std::size_t size() const { return values_.size(); }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Analytic test-function catalog. `power`/`lipschitz_power` mean |x|^a with
/// |x| the Euclidean norm; both they and `logabs` are treated as singular at
/// the origin, so grids whose cell centers hit x = 0 exactly are rejected at
/// sampling time.
struct FnSpec {
  enum class Kind {
    indicator,       // chi_B for a box B
    power,           // |x|^a
    logabs,          // log|x|
    coordinate,      // x_j
    gaussian,        // exp(-|x-c|^2 / (2 w^2))
    smooth_random,   // seeded band-limited trigonometric sum
    lipschitz_power  // |x|^beta, 0 < beta < 1
  };

  Kind kind;
  std::optional<Box> box;               // indicator
  double exponent = 0.0;                // power / lipschitz_power
  int axis = 0;                         // coordinate
  std::vector<double> center;           // gaussian
  double width = 1.0;                   // gaussian
  std::uint64_t seed = 0;               // smooth_random
  double bandwidth = 2.0;               // smooth_random

  static FnSpec indicator(Box b);
  static FnSpec power(double a);
  static FnSpec logabs();
  static FnSpec coordinate(int axis);
  static FnSpec gaussian(std::vector<double> center, double width);
  static FnSpec smooth_random(std::uint64_t seed, double bandwidth);
  static FnSpec lipschitz_power(double beta);

  std::string describe() const;
};

/// Evaluate a spec at a point. Throws singularity_error at forbidden points.
double evaluate(const FnSpec& spec, const std::vector<double>& x);

/// Sample at every cell center. `scale` evaluates spec(scale * x), realizing
/// dilations f_lambda(x) = f(lambda x) without re-deriving specs.
GridFunction sample(const FnSpec& spec, const Grid& grid, double scale = 1.0);

}  // namespace mixnorm
