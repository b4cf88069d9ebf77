#include "mixnorm/grid_function.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mixnorm/errors.hpp"

namespace mixnorm {

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("GridFunction: values length must equal grid sample count");
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (!std::isfinite(values_[k]))
      throw std::invalid_argument("GridFunction: non-finite value at flat index " +
                                  std::to_string(k));
}

FnSpec FnSpec::indicator(Box b) {
  FnSpec s;
  s.kind = Kind::indicator;
  s.box = std::move(b);
  return s;
}
FnSpec FnSpec::power(double a) {
  FnSpec s;
  s.kind = Kind::power;
  s.exponent = a;
  return s;
}
FnSpec FnSpec::logabs() {
  FnSpec s;
  s.kind = Kind::logabs;
  return s;
}
FnSpec FnSpec::coordinate(int axis) {
  FnSpec s;
  s.kind = Kind::coordinate;
  s.axis = axis;
  return s;
}
FnSpec FnSpec::gaussian(std::vector<double> center, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("FnSpec::gaussian: width must be positive");
  FnSpec s;
  s.kind = Kind::gaussian;
  s.center = std::move(center);
  s.width = width;
  return s;
}
FnSpec FnSpec::smooth_random(std::uint64_t seed, double bandwidth) {
  if (!(bandwidth > 0.0))
    throw std::invalid_argument("FnSpec::smooth_random: bandwidth must be positive");
  FnSpec s;
  s.kind = Kind::smooth_random;
  s.seed = seed;
  s.bandwidth = bandwidth;
  return s;
}
FnSpec FnSpec::lipschitz_power(double beta) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("FnSpec::lipschitz_power: beta must lie in (0,1)");
  FnSpec s;
  s.kind = Kind::lipschitz_power;
  s.exponent = beta;
  return s;
}

std::string FnSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::indicator: {
      os << "indicator[";
      for (int a = 0; a < box->dim(); ++a) {
        if (a) os << "x";
        os << "(" << box->lower()[a] << "," << box->upper()[a] << ")";
      }
      os << "]";
      break;
    }
    case Kind::power:
      os << "power(" << exponent << ")";
      break;
    case Kind::logabs:
      os << "logabs";
      break;
    case Kind::coordinate:
      os << "coordinate(" << axis << ")";
      break;
    case Kind::gaussian: {
      os << "gaussian(c=";
      for (std::size_t a = 0; a < center.size(); ++a) {
        if (a) os << ",";
        os << center[a];
      }
      os << ";w=" << width << ")";
      break;
    }
    case Kind::smooth_random:
      os << "smooth-random(seed=" << seed << ",bw=" << bandwidth << ")";
      break;
    case Kind::lipschitz_power:
      os << "lipschitz-power(" << exponent << ")";
      break;
  }
  return os.str();
}

namespace {

double euclidean_norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

// Band-limited trigonometric sum with seeded coefficients. Deterministic in
// (seed, bandwidth, dim).
struct TrigSum {
  static constexpr int kTerms = 8;
  std::vector<double> amp;    // kTerms
  std::vector<double> freq;   // kTerms * dim
  std::vector<double> phase;  // kTerms * dim

  TrigSum(std::uint64_t seed, double bandwidth, int dim) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ua(-1.0, 1.0);
    std::uniform_real_distribution<double> uf(0.25, bandwidth);
    std::uniform_real_distribution<double> up(0.0, 6.283185307179586);
    amp.resize(kTerms);
    freq.resize(static_cast<std::size_t>(kTerms) * dim);
    phase.resize(static_cast<std::size_t>(kTerms) * dim);
    for (int t = 0; t < kTerms; ++t) {
      amp[t] = ua(rng);
      for (int a = 0; a < dim; ++a) {
        freq[static_cast<std::size_t>(t) * dim + a] = uf(rng);
        phase[static_cast<std::size_t>(t) * dim + a] = up(rng);
      }
    }
  }

  double operator()(const std::vector<double>& x) const {
    const int dim = static_cast<int>(x.size());
    double s = 0.0;
    for (int t = 0; t < kTerms; ++t) {
      double prod = amp[t];
      for (int a = 0; a < dim; ++a)
        prod *= std::cos(freq[static_cast<std::size_t>(t) * dim + a] * x[a] +
                         phase[static_cast<std::size_t>(t) * dim + a]);
      s += prod;
    }
    return s;
  }
};

bool origin_singular(FnSpec::Kind kind) {
  return kind == FnSpec::Kind::power || kind == FnSpec::Kind::logabs ||
         kind == FnSpec::Kind::lipschitz_power;
}

}  // namespace

double evaluate(const FnSpec& spec, const std::vector<double>& x) {
  switch (spec.kind) {
    case FnSpec::Kind::indicator:
      return spec.box->contains(x) ? 1.0 : 0.0;
    case FnSpec::Kind::power:
    case FnSpec::Kind::lipschitz_power: {
      const double r = euclidean_norm(x);
      if (r == 0.0) throw singularity_error("power spec sampled exactly at the origin");
      return std::pow(r, spec.exponent);
    }
    case FnSpec::Kind::logabs: {
      const double r = euclidean_norm(x);
      if (r == 0.0) throw singularity_error("logabs spec sampled exactly at the origin");
      return std::log(r);
    }
    case FnSpec::Kind::coordinate:
      if (spec.axis < 0 || spec.axis >= static_cast<int>(x.size()))
        throw std::invalid_argument("coordinate spec: axis out of range");
      return x[static_cast<std::size_t>(spec.axis)];
    case FnSpec::Kind::gaussian: {
      if (spec.center.size() != x.size())
        throw std::invalid_argument("gaussian spec: center dimension mismatch");
      double q = 0.0;
      for (std::size_t a = 0; a < x.size(); ++a) {
        const double d = x[a] - spec.center[a];
        q += d * d;
      }
      return std::exp(-q / (2.0 * spec.width * spec.width));
    }
    case FnSpec::Kind::smooth_random: {
      TrigSum ts(spec.seed, spec.bandwidth, static_cast<int>(x.size()));
      return ts(x);
    }
  }
  throw std::invalid_argument("evaluate: unknown FnSpec kind");
}

GridFunction sample(const FnSpec& spec, const Grid& grid, double scale) {
  const int n = grid.dim();
  std::vector<double> vals(grid.size());

  // smooth_random coefficients are built once per grid, not per point.
  std::optional<TrigSum> ts;
  if (spec.kind == FnSpec::Kind::smooth_random) ts.emplace(spec.seed, spec.bandwidth, n);

  std::vector<double> x(n);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const std::vector<int> mi = grid.multi_index(k);
    for (int a = 0; a < n; ++a) x[a] = scale * grid.center(a, mi[a]);
    if (origin_singular(spec.kind) && euclidean_norm(x) == 0.0) {
      std::ostringstream os;
      os << "singularity at sample: spec " << spec.describe() << " hits the origin at cell " << k
         << " (center";
      for (int a = 0; a < n; ++a) os << " " << grid.center(a, grid.multi_index(k)[a]);
      os << ")";
      throw singularity_error(os.str());
    }
    vals[k] = ts ? (*ts)(x) : evaluate(spec, x);
  }
  return GridFunction(grid, std::move(vals));
}

}  // namespace mixnorm
