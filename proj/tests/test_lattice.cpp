#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mixnorm/errors.hpp"
#include "mixnorm/grid_function.hpp"
#include "mixnorm/integrate.hpp"

using namespace mixnorm;

TEST_CASE("box invariants") {
  CHECK_THROWS_AS(Box({0.0}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Box({1.0}, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(Box({}, {}), std::invalid_argument);
  const Box b({0.0, -1.0}, {2.0, 1.0});
  CHECK(b.dim() == 2);
  CHECK(b.volume() == doctest::Approx(4.0));
  CHECK(b.is_cube());
  CHECK_FALSE(Box({0.0, 0.0}, {1.0, 2.0}).is_cube());
}

TEST_CASE("grid centers on [0,1] with resolution 4") {
  const Grid g(Box({0.0}, {1.0}), {4});
  CHECK(g.center(0, 0) == doctest::Approx(0.125));
  CHECK(g.center(0, 1) == doctest::Approx(0.375));
  CHECK(g.center(0, 2) == doctest::Approx(0.625));
  CHECK(g.center(0, 3) == doctest::Approx(0.875));
  CHECK(g.size() == 4);
}

TEST_CASE("grid on unit square, resolution 2x2") {
  const Grid g(Box({0.0, 0.0}, {1.0, 1.0}), {2, 2});
  CHECK(g.size() == 4);
  CHECK(g.spacing()[0] == doctest::Approx(0.5));
  CHECK(g.spacing()[1] == doctest::Approx(0.5));
}

TEST_CASE("invalid resolution rejected") {
  CHECK_THROWS_AS(Grid(Box({0.0}, {1.0}), {0}), std::invalid_argument);
  CHECK_THROWS_AS(Grid(Box({0.0}, {1.0}), {-3}), std::invalid_argument);
  CHECK_THROWS_AS(Grid(Box({0.0}, {1.0}), {1}), std::invalid_argument);
}

TEST_CASE("odd resolution over symmetric box puts a center at 0, logabs refuses it") {
  const Grid g(Box({-1.0}, {1.0}), {3});
  CHECK(g.center(0, 1) == 0.0);
  CHECK_THROWS_AS(sample(FnSpec::logabs(), g), singularity_error);
  // even resolution avoids the origin
  const Grid g2(Box({-1.0}, {1.0}), {4});
  CHECK_NOTHROW(sample(FnSpec::logabs(), g2));
}

TEST_CASE("indicator sampling matches center membership") {
  const Grid g(Box({-1.0}, {2.0}), {6});
  const GridFunction f = sample(FnSpec::indicator(Box({0.0}, {1.0})), g);
  const double expect[6] = {0, 0, 1, 1, 0, 0};
  for (int k = 0; k < 6; ++k) CHECK(f[static_cast<std::size_t>(k)] == expect[k]);
}

TEST_CASE("spec evaluation spot values") {
  CHECK(evaluate(FnSpec::power(0.5), {0.25}) == doctest::Approx(0.5));
  CHECK(evaluate(FnSpec::logabs(), {1.0}) == doctest::Approx(0.0));
  CHECK(evaluate(FnSpec::coordinate(0), {3.0, -1.0}) == doctest::Approx(3.0));
  CHECK(evaluate(FnSpec::gaussian({0.0}, 1.0), {0.0}) == doctest::Approx(1.0));
}

TEST_CASE("sampling is deterministic") {
  const Grid g(Box({-4.0, -4.0}, {4.0, 4.0}), {16, 16});
  const GridFunction a = sample(FnSpec::smooth_random(123, 2.0), g);
  const GridFunction b = sample(FnSpec::smooth_random(123, 2.0), g);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
}

TEST_CASE("riemann integral of constants and indicators") {
  const Grid g(Box({0.0}, {1.0}), {8});
  const GridFunction one(g, std::vector<double>(8, 1.0));
  CHECK(riemann_integral(one, g.box()) == 1.0);  // 8 * (1/8), exact dyadic

  const GridFunction half = sample(FnSpec::indicator(Box({0.0}, {0.5})), g);
  CHECK(riemann_integral(half, g.box()) == doctest::Approx(0.5));
}

TEST_CASE("riemann integral of sqrt converges to 2/3") {
  const Grid g(Box({0.0}, {1.0}), {1024});
  const GridFunction f = sample(FnSpec::power(0.5), g);
  CHECK(riemann_integral(f, g.box()) == doctest::Approx(2.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("region outside the grid box is rejected") {
  const Grid g(Box({0.0}, {1.0}), {8});
  const GridFunction f(g, std::vector<double>(8, 1.0));
  CHECK_THROWS_AS(riemann_integral(f, Box({0.0}, {2.0})), std::invalid_argument);
}

TEST_CASE("integral linearity is exact for dyadic data") {
  const Grid g(Box({0.0}, {1.0}), {64});
  const GridFunction f = sample(FnSpec::indicator(Box({0.0}, {0.5})), g);
  const GridFunction h = sample(FnSpec::indicator(Box({0.25}, {0.75})), g);
  const double a = 2.0, b = -0.75;
  std::vector<double> combo(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) combo[k] = a * f[k] + b * h[k];
  const double lhs = riemann_integral(GridFunction(g, combo), g.box());
  const double rhs = a * riemann_integral(f, g.box()) + b * riemann_integral(h, g.box());
  CHECK(lhs == rhs);
}

TEST_CASE("refinement differences shrink monotonically for smooth functions") {
  const Box box({-4.0}, {4.0});
  const FnSpec spec = FnSpec::gaussian({0.5}, 0.8);
  double prev_gap = -1.0;
  int res = 64;
  double last = riemann_integral(sample(spec, Grid(box, {res})));
  for (int step = 0; step < 2; ++step) {
    res *= 2;
    const double next = riemann_integral(sample(spec, Grid(box, {res})));
    const double gap = std::fabs(next - last);
    if (prev_gap >= 0.0) CHECK(gap < prev_gap);
    prev_gap = gap;
    last = next;
  }
}

TEST_CASE("grid function rejects non-finite values and wrong sizes") {
  const Grid g(Box({0.0}, {1.0}), {4});
  CHECK_THROWS_AS(GridFunction(g, std::vector<double>(3, 0.0)), std::invalid_argument);
  std::vector<double> bad(4, 0.0);
  bad[2] = std::nan("");
  CHECK_THROWS_AS(GridFunction(g, bad), std::invalid_argument);
}

TEST_CASE("cell ranges decide closed boundaries by actual center values") {
  const Grid g(Box({0.0}, {1.0}), {8});
  // centers at 0.0625 + k/8; [0.0625, 0.5625] contains centers 0..4 inclusive
  const IndexRange r = g.axis_range(0, 0.0625, 0.5625);
  CHECK(r.lo == 0);
  CHECK(r.hi == 4);
  const IndexRange empty = g.axis_range(0, 0.07, 0.11);
  CHECK(empty.empty());
}
