#include "mixnorm/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mixnorm {

ExponentVector::ExponentVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("ExponentVector: must be nonempty");
  for (double p : entries_)
    if (!(p > 1.0) || !std::isfinite(p))
      throw std::invalid_argument("exponents must satisfy 1 < p_i < inf");
}

ExponentVector ExponentVector::uniform(double p, int n) {
  if (n < 1) throw std::invalid_argument("ExponentVector::uniform: n must be >= 1");
  return ExponentVector(std::vector<double>(static_cast<std::size_t>(n), p));
}

ExponentVector ExponentVector::dual() const {
  std::vector<double> d(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) d[i] = entries_[i] / (entries_[i] - 1.0);
  return ExponentVector(std::move(d));
}

ExponentVector ExponentVector::scaled(double r) const {
  if (!(r > 0.0)) throw std::invalid_argument("ExponentVector::scaled: r must be positive");
  std::vector<double> s(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) s[i] = r * entries_[i];
  return ExponentVector(std::move(s));
}

double ExponentVector::sum_reciprocals() const {
  double s = 0.0;
  for (double p : entries_) s += 1.0 / p;
  return s;
}

double ExponentVector::min_entry() const { return *std::min_element(entries_.begin(), entries_.end()); }
double ExponentVector::max_entry() const { return *std::max_element(entries_.begin(), entries_.end()); }

std::string ExponentVector::describe() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << entries_[i];
  }
  os << ")";
  return os.str();
}

ExponentRelation exponent_relation(const ExponentVector& p, const ExponentVector& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("exponent_relation: dimension mismatch");
  ExponentRelation r;
  r.alpha = p.sum_reciprocals() - q.sum_reciprocals();
  r.componentwise_le = true;
  r.some_strict = false;
  bool some_equal = false;
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > q[i]) r.componentwise_le = false;
    if (p[i] < q[i]) r.some_strict = true;
    if (p[i] == q[i]) some_equal = true;
  }
  const double n = static_cast<double>(p.size());
  r.alpha_in_range = r.alpha > 0.0 && r.alpha < n;
  r.admissible = r.componentwise_le && r.some_strict && r.alpha_in_range;
  r.boundary = r.admissible && some_equal;
  return r;
}

ProportionalityCheck nogayama_relation_check(const ExponentVector& p, const ExponentVector& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("nogayama_relation_check: dimension mismatch");
  const double sp = p.sum_reciprocals();
  const double sq = q.sum_reciprocals();
  ProportionalityCheck c;
  c.residuals.resize(static_cast<std::size_t>(p.size()));
  c.holds = true;
  for (int j = 0; j < p.size(); ++j) {
    const double res = p[j] * sp - q[j] * sq;
    c.residuals[static_cast<std::size_t>(j)] = res;
    if (std::fabs(res) > 1e-12) c.holds = false;
  }
  return c;
}

ExponentPair::ExponentPair(ExponentVector p_, ExponentVector q_)
    : p(std::move(p_)), q(std::move(q_)), alpha(0.0), beta(std::nullopt) {
  alpha = exponent_relation(p, q).alpha;
}

ExponentPair::ExponentPair(ExponentVector p_, ExponentVector q_, double beta_)
    : p(std::move(p_)), q(std::move(q_)), alpha(0.0), beta(beta_) {
  alpha = exponent_relation(p, q).alpha - beta_;
}

void ExponentPair::require_admissible() const {
  const ExponentRelation r = relation();
  if (!r.componentwise_le || !r.some_strict)
    throw std::invalid_argument("exponent pair must satisfy 1 < p <= q < inf with p != q, got p=" +
                                p.describe() + " q=" + q.describe());
  const double n = static_cast<double>(p.size());
  if (beta) {
    if (!(*beta > 0.0 && *beta < 1.0))
      throw std::invalid_argument("Lipschitz order beta must lie in (0,1)");
    if (!(alpha > 0.0) || !(alpha + *beta < n))
      throw std::invalid_argument("alpha + beta = sum 1/p - sum 1/q must leave alpha in (0,n)");
  } else if (!r.alpha_in_range) {
    throw std::invalid_argument("alpha = sum 1/p - sum 1/q must lie in (0,n), got " +
                                std::to_string(alpha));
  }
}

}  // namespace mixnorm
