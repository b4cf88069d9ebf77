#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mixnorm/corpus.hpp"
#include "mixnorm/cube_family.hpp"
#include "mixnorm/exec.hpp"
#include "mixnorm/exponents.hpp"
#include "mixnorm/fractional.hpp"
#include "mixnorm/geometry.hpp"

namespace mixnorm {

/// Shared experiment knobs: domain truncation box, resolution ladder
/// (coarse to fine), cube-family shape, and the per-doubling growth gate
/// that defines "refinement-stable".
struct HarnessConfig {
  Box box;
  std::vector<std::vector<int>> resolutions;
  int family_levels = 5;
  int family_translates = 1;
  double stability_tol = 0.10;
  Exec exec = Exec::parallel;
  KernelQuadrature quadrature{};
};

struct RatioRow {
  std::string case_id;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  bool skipped = false;
  std::string note;
};

/// Structured experiment record. The JSON body is deterministic in
/// (seed, parameters); wall time is reported separately so reruns produce
/// byte-identical bodies.
struct VerificationReport {
  std::string experiment_id;
  nlohmann::json parameters;
  std::vector<RatioRow> rows;
  nlohmann::json details;
  bool passed = false;
  double wall_seconds = 0.0;

  nlohmann::json body_json() const;
  std::string ratios_csv() const;
  std::string summary_line() const;
};

struct OperatorDescriptor {
  enum class Kind {
    identity,
    fractional_integral,
    commutator,
    abs_commutator,
    maximal,
    sharp_maximal,
    fractional_maximal
  };
  Kind kind = Kind::identity;
  double alpha = 0.5;
  std::optional<FnSpec> symbol;  // b for the commutators

  std::string name() const;
};

struct NormDescriptor {
  enum class Kind { classical, mixed, weighted };
  Kind kind = Kind::mixed;
  double p = 2.0;                      // classical / weighted
  std::optional<ExponentVector> pvec;  // mixed
  std::optional<FnSpec> weight;        // weighted

  std::string name() const;
};

/// Ordinary least squares slope/intercept of y against x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Empirical operator ratios ||T f||_out / ||f||_in over the corpus at each
/// resolution; reports the max ratio, its witness, and the refinement trend.
VerificationReport operator_ratio(const OperatorDescriptor& op, const Corpus& corpus,
                                  const ExponentVector& in_exp, const ExponentVector& out_exp,
                                  const HarnessConfig& config);

/// Fractional-integral boundedness: validates the exponent gate, then runs
/// operator_ratio for I_alpha with alpha taken from the pair.
VerificationReport experiment_fractional_bound(const ExponentPair& pair, const Corpus& corpus,
                                               const HarnessConfig& config);

/// Sharp-maximal control: ratios ||Mf|| / ||M#f|| in the mixed norm, plus
/// the unconditional pointwise check M#f <= 2 Mf at every cell.
VerificationReport experiment_sharp_maximal(const ExponentVector& p, const Corpus& corpus,
                                            const HarnessConfig& config);

/// Commutator boundedness for a bounded-mean-oscillation symbol:
/// (i) norm ratios with refinement trend, (ii) dilation invariance of the
/// ratio under f_lambda(x) = f(lambda x) using well-resolved gaussian
/// probes, (iii) the pointwise sharp-maximal domination probe
///   M#([b,I_a]f)(x) <= C ||b||_BMO (I_a|f|(x) + I_{ra}(|f|^r)(x)^{1/r})
/// with C_emp reported and checked refinement-stable.
VerificationReport experiment_bmo_sufficiency(const ExponentPair& pair, const FnSpec& b_spec,
                                              const Corpus& corpus, const HarnessConfig& config,
                                              double r_lemma = 1.5,
                                              std::vector<double> dilations = {0.25, 0.5, 1.0, 2.0,
                                                                               4.0},
                                              double dilation_tol = 0.20);

/// Scaling probe of the converse direction: spreads the test function,
/// f_lambda(x) = f(x / lambda), and fits the log-log growth of the ratio.
/// A coordinate symbol gains one power of lambda (slope 1, certifying
/// unboundedness); a logarithmic symbol is dilation-invariant (slope 0).
VerificationReport experiment_bmo_necessity_probe(const ExponentPair& pair, const FnSpec& b_spec,
                                                  const Corpus& corpus,
                                                  const HarnessConfig& config,
                                                  std::vector<double> dilations = {1.0, 2.0, 4.0,
                                                                                   8.0},
                                                  double expected_slope = 1.0,
                                                  double slope_tol = 0.15);

/// Lipschitz-symbol commutator: (i) pointwise |[b,I_a]f| <=
/// L_beta(b) I_{a+b}|f| with the discrete Lipschitz constant, zero
/// violations; (ii) norm ratios with refinement trend; (iii) the
/// fractional-maximal commutator instance M_{a,b} <= C_n I_{a,b}.
VerificationReport experiment_lipschitz(const ExponentPair& pair, const FnSpec& b_spec,
                                        const Corpus& corpus, const HarnessConfig& config);

/// Pointwise dominations: |[b,I_a]f| <= I_{a,b}(|f|) exactly;
/// M_{a,b} f <= C_emp I_{a,b}(|f|) with C_emp near n^{(n-a)/2}; the
/// Gaussian-semigroup kernel bound K_a(r) <= C r^{a-n} with C fitted
/// stably across r.
struct DominationParams {
  double alpha = 0.5;
  FnSpec b_spec = FnSpec::logabs();
  int heat_n = 1;
  double heat_alpha = 0.5;
  std::vector<double> heat_r = {0.1, 1.0, 10.0};
};
VerificationReport experiment_pointwise_dominations(const Corpus& corpus,
                                                    const HarnessConfig& config,
                                                    const DominationParams& params = {});

/// Lattice/limit/indicator/local-integral axioms of the function-space
/// norm on sampled instances (zero violations expected).
VerificationReport experiment_ball_axioms(const NormDescriptor& norm, int samples,
                                          std::uint64_t seed, const HarnessConfig& config);

/// Majorant-iteration contracts: |h| <= R_K h; M(R_K h) <= 2A R_{K+1} h;
/// ||R_K h||_{p'} <= 2 ||h||_{p'} with A twice the empirical maximal ratio.
VerificationReport experiment_rubio_contracts(const ExponentVector& p, const Corpus& corpus,
                                              const HarnessConfig& config, int iterations = 6);

}  // namespace mixnorm
