// Timing comparison of the serial reference kernels against the OpenMP
// paths, which must agree bitwise. Run with OMP_NUM_THREADS set to taste.
#include <chrono>
#include <cstdio>
#include <cstring>

#include "mixnorm/corpus.hpp"
#include "mixnorm/fractional.hpp"
#include "mixnorm/maximal.hpp"
#include "mixnorm/seminorms.hpp"

using namespace mixnorm;

namespace {

double now_seconds() {
  using Clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(Clock::now().time_since_epoch()).count();
}

template <typename Fn>
double time_it(Fn&& fn, int repeats = 1) {
  const double t0 = now_seconds();
  for (int i = 0; i < repeats; ++i) fn();
  return (now_seconds() - t0) / repeats;
}

bool bitwise_equal(const GridFunction& a, const GridFunction& b) {
  if (a.size() != b.size()) return false;
  return std::memcmp(a.values().data(), b.values().data(), a.size() * sizeof(double)) == 0;
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-34s %10.4f s %10.4f s %8.2fx   %s\n", name, serial, parallel,
              serial / parallel, equal ? "bitwise-equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int res2d = 96;
  int res1d = 2048;
  if (argc > 1) res2d = std::atoi(argv[1]);
  if (argc > 2) res1d = std::atoi(argv[2]);

  const Box box2({-8.0, -8.0}, {8.0, 8.0});
  const Box box1({-8.0}, {8.0});
  const Grid g2(box2, {res2d, res2d});
  const Grid g1(box1, {res1d});

  const Corpus corpus = make_corpus(7, 2, box2);
  const GridFunction f2 = sample_entry(corpus.entries[1], g2);
  const GridFunction b2 = sample(FnSpec::logabs(), g2);
  const Corpus corpus1 = make_corpus(7, 2, box1);
  const GridFunction f1 = sample_entry(corpus1.entries[1], g1);
  const GridFunction b1 = sample(FnSpec::coordinate(0), g1);

  std::printf("grid 2D %dx%d, 1D %d\n", res2d, res2d, res1d);
  std::printf("%-34s %12s %12s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    GridFunction rs = f2, rp = f2;
    const double ts = time_it([&] { rs = fractional_integral(f2, 0.5, {}, Exec::serial); });
    const double tp = time_it([&] { rp = fractional_integral(f2, 0.5, {}, Exec::parallel); });
    row("fractional_integral 2D", ts, tp, bitwise_equal(rs, rp));
  }
  {
    GridFunction rs = f2, rp = f2;
    const double ts = time_it([&] { rs = commutator_fractional(b2, f2, 0.5, {}, Exec::serial); });
    const double tp = time_it([&] { rp = commutator_fractional(b2, f2, 0.5, {}, Exec::parallel); });
    row("commutator 2D", ts, tp, bitwise_equal(rs, rp));
  }
  {
    // per-pair reference (recomputes the kernel) vs the table-driven path
    GridFunction rr = f2, rt = f2;
    const double ts = time_it([&] { rr = fractional_integral_reference(f2, 0.5); });
    const double tp = time_it([&] { rt = fractional_integral(f2, 0.5, {}, Exec::parallel); });
    row("reference vs kernel table 2D", ts, tp, bitwise_equal(rr, rt));
  }
  {
    const CubeFamily family = CubeFamily::dyadic(box2, 0, 6, 1);
    GridFunction rs = f2, rp = f2;
    const double ts = time_it([&] { rs = sharp_maximal(f2, family, Exec::serial).values; }, 5);
    const double tp = time_it([&] { rp = sharp_maximal(f2, family, Exec::parallel).values; }, 5);
    row("sharp_maximal 2D", ts, tp, bitwise_equal(rs, rp));
  }
  {
    double vs = 0, vp = 0;
    const double ts = time_it([&] { vs = lipschitz_norm_pointwise(b1, 0.5, Exec::serial, g1.size()); });
    const double tp = time_it([&] { vp = lipschitz_norm_pointwise(b1, 0.5, Exec::parallel, g1.size()); });
    row("lipschitz pair sweep 1D", ts, tp, vs == vp);
  }
  {
    GridFunction rs = f1, rp = f1;
    const double ts = time_it([&] { rs = commutator_fractional(b1, f1, 0.25, {}, Exec::serial); });
    const double tp = time_it([&] { rp = commutator_fractional(b1, f1, 0.25, {}, Exec::parallel); });
    row("commutator 1D", ts, tp, bitwise_equal(rs, rp));
  }
  return 0;
}
