// Acceptance suite: runs every acceptance check at its stated tolerance and
// prints one pass/fail line per criterion. Exits nonzero when any fails.
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mixnorm/heat_kernel.hpp"
#include "mixnorm/integrate.hpp"
#include "mixnorm/maximal.hpp"
#include "mixnorm/norms.hpp"
#include "mixnorm/verify.hpp"
#include "mixnorm/weights.hpp"

using namespace mixnorm;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("criterion %2d [%s] %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

const Box kBox1({-8.0}, {8.0});
const Box kBox2({-8.0, -8.0}, {8.0, 8.0});

GridFunction random_function(const Grid& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_real_distribution<double> upos(-2.0, 2.0);
  std::uniform_real_distribution<double> uwidth(0.5, 1.5);
  std::vector<double> c(static_cast<std::size_t>(g.dim()));
  for (double& x : c) x = upos(rng);
  switch (pick(rng)) {
    case 0:
      return sample(FnSpec::gaussian(c, uwidth(rng)), g);
    case 1: {
      const GridFunction raw = sample(FnSpec::smooth_random(rng(), 2.0), g);
      std::vector<double> v(raw.size());
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = std::fabs(raw[k]);
      return GridFunction(g, std::move(v));
    }
    default:
      return sample(FnSpec::indicator(Box::cube(c, uwidth(rng) + 0.5)), g);
  }
}

// 1. Indicator-norm formula at 256^2, relative 1e-3, 10 (Q, p) pairs.
void criterion_1() {
  const Grid g(kBox2, {256, 256});
  struct Case {
    double lo0, lo1, side;
    double p0, p1;
  };
  const Case cases[10] = {
      {-2.0, -2.0, 4.0, 2.0, 4.0},      {0.0, 0.0, 1.0, 2.0, 2.0},
      {-5.0, 1.0, 2.0, 3.0, 1.5},       {0.25, -0.75, 0.5, 2.5, 5.0},
      {1.0, -4.0, 3.0, 4.0, 4.0 / 3.0}, {-4.0, -4.0, 8.0, 2.0, 3.0},
      {-1.5, 2.0, 1.5, 5.0, 2.0},       {-7.0, -7.0, 6.0, 1.5, 3.0},
      {3.0, 3.0, 0.25, 2.0, 2.0},       {-6.0, 0.0, 5.0, 3.5, 2.25}};
  double worst = 0.0;
  bool first_pair_ok = false;
  for (const Case& c : cases) {
    const Box q({c.lo0, c.lo1}, {c.lo0 + c.side, c.lo1 + c.side});
    const ExponentVector p({c.p0, c.p1});
    const double measured = mixed_norm(sample(FnSpec::indicator(q), g), p);
    const double formula = indicator_norm_formula(q, p);
    worst = std::max(worst, std::fabs(measured - formula) / formula);
    if (c.side == 4.0 && c.p0 == 2.0 && c.p1 == 4.0)
      first_pair_ok = std::fabs(formula - std::pow(2.0, 1.5)) < 1e-12;
  }
  report(1, worst < 1e-3 && first_pair_ok,
         "indicator-norm formula at 256^2: max rel err " + fmt(worst) +
             " (tol 1e-3); side-4 cube gives 2^{3/2}");
}

// 2. Equal-exponent mixed norm equals the classical norm within 1e-12.
void criterion_2() {
  const Grid g(kBox2, {48, 48});
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> up(1.3, 4.5);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const GridFunction f = random_function(g, rng);
    const double p = up(rng);
    const double mixed = mixed_norm(f, ExponentVector::uniform(p, 2));
    const double classical = classical_norm(f, p);
    if (classical > 0.0) worst = std::max(worst, std::fabs(mixed - classical) / classical);
  }
  report(2, worst < 1e-12,
         "classical reduction on 50 random functions: max rel diff " + fmt(worst) +
             " (tol 1e-12)");
}

// 3. Discrete Holder: gap >= -1e-12 on 1000 random pairs, three exponent vectors.
void criterion_3() {
  const Grid g(kBox2, {24, 24});
  std::mt19937_64 rng(1003);
  const ExponentVector ps[3] = {ExponentVector({2.0, 2.0}), ExponentVector({2.0, 4.0}),
                                ExponentVector({3.0, 1.5})};
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const GridFunction f = random_function(g, rng);
    const GridFunction h = random_function(g, rng);
    const double gap = holder_gap(f, h, ps[i % 3]);
    worst = std::min(worst, gap);
  }
  report(3, worst >= -1e-12,
         "discrete Holder on 1000 random pairs: min gap " + fmt(worst) + " (tol -1e-12)");
}

// 4. Pointwise sharp-maximal bound M# f <= 2 M f at every cell.
void criterion_4() {
  const Grid g(kBox2, {64, 64});
  const CubeFamily family = CubeFamily::dyadic(kBox2, 0, 5, 1);
  const Corpus corpus = make_corpus(1004, 20, kBox2);
  std::size_t violations = 0;
  for (const CorpusEntry& e : corpus.entries) {
    const GridFunction f = sample_entry(e, g);
    const GridFunction m = maximal(f, family).values;
    const GridFunction s = sharp_maximal(f, family).values;
    for (std::size_t k = 0; k < g.size(); ++k)
      if (s[k] > 2.0 * m[k]) ++violations;
  }
  report(4, violations == 0,
         "pointwise M# <= 2M over 20 entries x 64^2 cells: " + std::to_string(violations) +
             " violations");
}

// 5. Sharp maximal control, 1D 64->128->256 and 2D 32^2->64^2->128^2.
void criterion_5() {
  HarnessConfig c1{kBox1, {{64}, {128}, {256}}};
  c1.family_levels = 6;
  const VerificationReport r1 =
      experiment_sharp_maximal(ExponentVector({2.5}), make_corpus(1005, 20, kBox1), c1);

  HarnessConfig c2{kBox2, {{32, 32}, {64, 64}, {128, 128}}};
  c2.family_levels = 5;
  const VerificationReport r2 =
      experiment_sharp_maximal(ExponentVector({2.0, 3.0}), make_corpus(1055, 20, kBox2), c2);

  const auto growths = [](const VerificationReport& r) {
    std::string s;
    for (const auto& gv : r.details["trend"]["growth"]) s += fmt(gv.get<double>()) + " ";
    return s;
  };
  report(5, r1.passed && r2.passed,
         "sharp-maximal ratio stability: 1D growth [" + growths(r1) + "], 2D p=(2,3) growth [" +
             growths(r2) + "] (gate 0.10), pointwise checks clean");
}

// 6. Fractional-integral boundedness in n=2 at alpha = 1/2; gate rejects
//    inadmissible pairs.
void criterion_6() {
  HarnessConfig hc{kBox2, {{32, 32}, {64, 64}, {128, 128}}};
  const ExponentPair pair(ExponentVector({2.0, 2.0}), ExponentVector({4.0, 4.0}));
  const Corpus corpus = make_corpus(1006, 10, kBox2);
  const VerificationReport rep = experiment_fractional_bound(pair, corpus, hc);

  bool rejected_equal = false, rejected_negative = false;
  try {
    experiment_fractional_bound(ExponentPair(ExponentVector({2.0, 2.0}), ExponentVector({2.0, 2.0})),
                                corpus, hc);
  } catch (const std::invalid_argument&) {
    rejected_equal = true;
  }
  try {
    experiment_fractional_bound(ExponentPair(ExponentVector({4.0, 4.0}), ExponentVector({2.0, 2.0})),
                                corpus, hc);
  } catch (const std::invalid_argument&) {
    rejected_negative = true;
  }
  std::string growths;
  for (const auto& gv : rep.details["trend"]["growth"]) growths += fmt(gv.get<double>()) + " ";
  report(6, rep.passed && rejected_equal && rejected_negative,
         "I_alpha bound (p=(2,2) -> q=(4,4), alpha=1/2): growth [" + growths +
             "] (gate 0.10); alpha <= 0 pairs rejected");
}

// 7. BMO sufficiency: dilation variation < 20%, Lemma-probe constant stable.
void criterion_7() {
  HarnessConfig hc{kBox2, {{192, 192}, {256, 256}}};
  hc.family_levels = 5;
  const ExponentPair pair(ExponentVector({2.0, 2.0}), ExponentVector({4.0, 4.0}));
  const Corpus corpus = make_corpus(42, 4, kBox2);
  const VerificationReport rep = experiment_bmo_sufficiency(
      pair, FnSpec::logabs(), corpus, hc, 1.5, {0.25, 0.5, 1.0, 2.0, 4.0}, 0.20);
  double worst_variation = 0.0;
  for (const auto& d : rep.details["dilation"])
    worst_variation = std::max(worst_variation, d["variation"].get<double>());
  std::string cemp;
  for (const auto& cv : rep.details["lemma_probe"]["c_emp_by_resolution"])
    cemp += fmt(cv.get<double>()) + " ";
  report(7, rep.passed,
         "BMO sufficiency (b=log|x|, p=(2,2), q=(4,4)): dilation variation " +
             fmt(worst_variation) + " (tol 0.20), C_emp [" + cemp + "] stable, r=1.5");
}

// 8. Necessity probe: coordinate symbol slope 1 +/- 0.15, log symbol 0 +/- 0.15.
void criterion_8() {
  HarnessConfig hc{kBox1, {{2048}}};
  const ExponentPair pair(ExponentVector({2.0}), ExponentVector({4.0}));
  const Corpus corpus = make_corpus(1008, 1, kBox1);
  const VerificationReport grow = experiment_bmo_necessity_probe(
      pair, FnSpec::coordinate(0), corpus, hc, {1.0, 2.0, 4.0, 8.0}, 1.0, 0.15);
  const VerificationReport flat = experiment_bmo_necessity_probe(
      pair, FnSpec::logabs(), corpus, hc, {1.0, 2.0, 4.0, 8.0}, 0.0, 0.15);
  std::string slopes;
  for (const auto& f : grow.details["fits"]) slopes += fmt(f["slope"].get<double>()) + " ";
  std::string slopes0;
  for (const auto& f : flat.details["fits"]) slopes0 += fmt(f["slope"].get<double>()) + " ";
  report(8, grow.passed && flat.passed,
         "necessity probe: b=x_1 slopes [" + slopes + "] (1 +/- 0.15), b=log|x| slopes [" +
             slopes0 + "] (0 +/- 0.15)");
}

// 9. Lipschitz pointwise domination and ratio stability (alpha = beta = 1/8).
void criterion_9() {
  HarnessConfig hc{kBox1, {{1024}, {2048}, {4096}}};
  hc.family_levels = 7;
  const ExponentPair pair(ExponentVector({2.0}), ExponentVector({4.0}), 0.125);
  const Corpus corpus = make_corpus(1009, 4, kBox1);
  const VerificationReport rep =
      experiment_lipschitz(pair, FnSpec::lipschitz_power(0.125), corpus, hc);
  const auto violations = rep.details["pointwise_violations"].get<std::size_t>();
  std::string growths;
  for (const auto& gv : rep.details["trend"]["growth"]) growths += fmt(gv.get<double>()) + " ";
  report(9, rep.passed && violations == 0,
         "Lipschitz domination (alpha=beta=1/8, res up to 4096): " + std::to_string(violations) +
             " pointwise violations; ratio growth [" + growths + "] (gate 0.10)");
}

// 10. Majorant-iteration contracts with K = 6 over 10 test functions.
void criterion_10() {
  HarnessConfig hc{kBox2, {{48, 48}}};
  hc.family_levels = 4;
  const Corpus corpus = make_corpus(1010, 10, kBox2);
  const VerificationReport rep =
      experiment_rubio_contracts(ExponentVector({2.0, 4.0}), corpus, hc, 6);
  const auto& v = rep.details["violations"];
  report(10, rep.passed,
         "majorant iteration (K=6, 10 functions): lower/maximal/norm violations " +
             std::to_string(v["lower_bound"].get<std::size_t>()) + "/" +
             std::to_string(v["maximal_bound"].get<std::size_t>()) + "/" +
             std::to_string(v["norm_bound"].get<std::size_t>()));
}

// 11. Gaussian-semigroup kernel: K(r) sqrt(r) = (2 pi)^{-1/2} +/- 1e-4 and
//     log-log slope alpha - n +/- 1e-3.
void criterion_11() {
  const double expected = 1.0 / std::sqrt(2.0 * M_PI);
  double worst = 0.0;
  for (double r : {0.1, 1.0, 10.0})
    worst = std::max(worst, std::fabs(heat_kernel_fractional(r, 0.5, 1) * std::sqrt(r) - expected));
  std::vector<double> lr, lk;
  for (double r = 0.1; r <= 10.0; r *= 1.5) {
    lr.push_back(std::log(r));
    lk.push_back(std::log(heat_kernel_fractional(r, 0.5, 1)));
  }
  const double slope = fit_line(lr, lk).slope;
  report(11, worst < 1e-4 && std::fabs(slope + 0.5) < 1e-3,
         "heat kernel: |K sqrt(r) - (2pi)^{-1/2}| = " + fmt(worst) +
             " (tol 1e-4); log-log slope " + fmt(slope) + " (target -0.5 +/- 1e-3)");
}

// 12. Weight algebra: unit constant exact, nesting, product factorization,
//     cube-vs-rectangle ordering.
void criterion_12() {
  const Grid g2(kBox2, {64, 64});
  const CubeFamily cubes = CubeFamily::dyadic(kBox2, 0, 4, 1);
  std::size_t violations = 0;

  const Weight unit(GridFunction(g2, std::vector<double>(g2.size(), 1.0)), "unit");
  for (double p : {1.5, 2.0, 3.0})
    if (ap_constant(unit, p, cubes) != 1.0) ++violations;
  if (a1_constant(unit, cubes) != 1.0) ++violations;

  // nesting over three weights
  std::vector<Weight> weights;
  weights.emplace_back(sample(FnSpec::power(0.5), g2), "power(0.5)");
  {
    const GridFunction base = sample(FnSpec::gaussian({0.5, -0.5}, 2.0), g2);
    std::vector<double> v(base.values().begin(), base.values().end());
    for (double& x : v) x += 0.05;
    weights.emplace_back(GridFunction(g2, std::move(v)), "gaussian+floor");
  }
  weights.push_back(embedding_weight(g2, 0.5, cubes));
  for (const Weight& w : weights) {
    double prev = std::numeric_limits<double>::infinity();
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
      const double c = ap_constant(w, p, cubes);
      if (!(c >= 1.0) || c > prev + 1e-12) ++violations;
      prev = c;
    }
  }

  // product factorization and rectangle comparison
  const Grid gx(kBox1, {64});
  const CubeFamily fx = CubeFamily::dyadic(kBox1, 0, 4, 1);
  const RectangleFamily rects(fx, fx);
  const GridFunction mu = sample(FnSpec::power(0.5), gx);
  const GridFunction nu_base = sample(FnSpec::gaussian({0.5}, 2.0), gx);
  std::vector<double> nu(nu_base.values().begin(), nu_base.values().end());
  for (double& x : nu) x += 0.2;
  std::vector<double> prod(g2.size());
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j)
      prod[static_cast<std::size_t>(i) * 64 + j] =
          mu[static_cast<std::size_t>(i)] * nu[static_cast<std::size_t>(j)];
  const Weight w2(GridFunction(g2, std::move(prod)), "product");
  for (double p : {1.5, 2.0, 3.0}) {
    const double star = ap_star_constant(w2, p, rects);
    const double cx = ap_constant(Weight(mu, "mu"), p, fx);
    const double cy = ap_constant(Weight(GridFunction(gx, nu), "nu"), p, fx);
    if (star > cx * cy + 1e-12) ++violations;
    if (ap_constant(w2, p, cubes) > star + 1e-12) ++violations;
  }
  report(12, violations == 0,
         "weight algebra (unit exact, A_p nesting, product factorization, cube<=rectangle): " +
             std::to_string(violations) + " violations");
}

// 13. Function-space axioms on 200 sampled instances per norm kind.
void criterion_13() {
  HarnessConfig hc{kBox2, {{48, 48}}};
  NormDescriptor mixed;
  mixed.kind = NormDescriptor::Kind::mixed;
  mixed.pvec = ExponentVector({2.0, 4.0});
  const VerificationReport rm = experiment_ball_axioms(mixed, 200, 1013, hc);

  NormDescriptor classical;
  classical.kind = NormDescriptor::Kind::classical;
  classical.p = 2.0;
  const VerificationReport rc = experiment_ball_axioms(classical, 200, 1014, hc);

  NormDescriptor weighted;
  weighted.kind = NormDescriptor::Kind::weighted;
  weighted.p = 2.0;
  weighted.weight = FnSpec::gaussian({0.0, 0.0}, 3.0);
  const VerificationReport rw = experiment_ball_axioms(weighted, 200, 1015, hc);

  report(13, rm.passed && rc.passed && rw.passed,
         "function-space axioms (200 instances x {classical, mixed, weighted}): " +
             std::string(rm.passed && rc.passed && rw.passed ? "zero violations"
                                                             : "violations present"));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  if (g_failures == 0)
    std::printf("acceptance: all 13 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
