#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mixnorm {

/// Per-axis integrability exponents, each strictly between 1 and infinity.
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<double> entries);
  static ExponentVector uniform(double p, int n);

  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& entries() const { return entries_; }

  /// Componentwise conjugate p_i / (p_i - 1).
  ExponentVector dual() const;
  /// Componentwise r * p_i (entries must stay > 1).
  ExponentVector scaled(double r) const;

  double sum_reciprocals() const;
  double min_entry() const;
  double max_entry() const;

  std::string describe() const;

 private:
  std::vector<double> entries_;
};

/// Diagnostics for the exponent balance alpha = sum 1/p_i - sum 1/q_i and
/// the admissibility gate 1 < p <= q < inf, p != q, 0 < alpha < n.
struct ExponentRelation {
  double alpha = 0.0;
  bool componentwise_le = false;  // p_i <= q_i for all i
  bool some_strict = false;       // p_i < q_i for some i
  bool alpha_in_range = false;    // 0 < alpha < n
  bool admissible = false;
  bool boundary = false;  // admissible with p_i == q_i for some i
};

ExponentRelation exponent_relation(const ExponentVector& p, const ExponentVector& q);

/// Residuals of the proportionality condition
/// p_j * sum 1/p_i == q_j * sum 1/q_i for every j (tolerance 1e-12).
struct ProportionalityCheck {
  bool holds = false;
  std::vector<double> residuals;
};

ProportionalityCheck nogayama_relation_check(const ExponentVector& p, const ExponentVector& q);

/// Source/target exponents for a fractional-order mapping, with the order
/// split into alpha (+ optional Lipschitz order beta) so that
/// alpha + beta = sum 1/p_i - sum 1/q_i.
struct ExponentPair {
  ExponentVector p;
  ExponentVector q;
  double alpha;
  std::optional<double> beta;

  ExponentPair(ExponentVector p, ExponentVector q);
  ExponentPair(ExponentVector p, ExponentVector q, double beta);

  ExponentRelation relation() const { return exponent_relation(p, q); }
  /// Throws std::invalid_argument when the Lemma-style gate fails
  /// (including 0 < beta < 1 and alpha > 0 when beta is present).
  void require_admissible() const;
};

}  // namespace mixnorm
