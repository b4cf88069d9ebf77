#include "mixnorm/corpus.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mixnorm {

Corpus make_corpus(std::uint64_t seed, int size, const std::vector<FnSpec::Kind>& kinds,
                   const Box& domain) {
  if (size < 1) throw std::invalid_argument("make_corpus: size must be >= 1");
  if (kinds.empty()) throw std::invalid_argument("make_corpus: kinds must be nonempty");
  const int n = domain.dim();

  // Supports live well inside the domain so experiments can dilate entries
  // by a factor of four in either direction.
  std::vector<double> dcenter(static_cast<std::size_t>(n));
  double min_half = std::numeric_limits<double>::infinity();
  for (int a = 0; a < n; ++a) {
    dcenter[static_cast<std::size_t>(a)] = 0.5 * (domain.lower()[a] + domain.upper()[a]);
    min_half = std::min(min_half, 0.5 * domain.side(a));
  }
  const double place_half = 0.12 * min_half;  // support centers within 12% of the half-width
  const double side_lo = 0.12 * min_half;
  const double side_hi = 0.22 * min_half;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ucenter(-place_half, place_half);
  std::uniform_real_distribution<double> uside(side_lo, side_hi);
  std::uniform_real_distribution<double> uwidth(0.25, 0.45);
  std::uniform_real_distribution<double> ubw(1.0, 3.0);
  std::uniform_real_distribution<double> udil(0.8, 1.25);
  std::uniform_real_distribution<double> ushift(-0.1, 0.1);

  Corpus corpus;
  corpus.seed = seed;
  corpus.entries.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    const FnSpec::Kind kind = kinds[static_cast<std::size_t>(i) % kinds.size()];
    std::vector<double> center(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      center[static_cast<std::size_t>(a)] = dcenter[static_cast<std::size_t>(a)] + ucenter(rng);
    const double side = uside(rng);
    const Box support = Box::cube(center, side);

    CorpusEntry e{FnSpec::indicator(support), 1.0, std::vector<double>(static_cast<std::size_t>(n), 0.0),
                  support, ""};
    switch (kind) {
      case FnSpec::Kind::indicator:
        e.spec = FnSpec::indicator(support);
        break;
      case FnSpec::Kind::gaussian:
        e.spec = FnSpec::gaussian(center, uwidth(rng) * side);
        break;
      case FnSpec::Kind::smooth_random:
        e.spec = FnSpec::smooth_random(rng(), ubw(rng));
        break;
      default:
        throw std::invalid_argument("make_corpus: unsupported kind for corpus entries");
    }
    e.dilation = udil(rng);
    for (int a = 0; a < n; ++a) e.translation[static_cast<std::size_t>(a)] = ushift(rng);

    std::ostringstream label;
    label << "entry" << i << ":" << e.spec.describe();
    e.label = label.str();
    corpus.entries.push_back(std::move(e));
  }
  return corpus;
}

Corpus make_corpus(std::uint64_t seed, int size, const Box& domain) {
  return make_corpus(
      seed, size,
      {FnSpec::Kind::indicator, FnSpec::Kind::gaussian, FnSpec::Kind::smooth_random}, domain);
}

GridFunction sample_entry(const CorpusEntry& entry, const Grid& grid, double outer_scale) {
  if (!(outer_scale > 0.0)) throw std::invalid_argument("sample_entry: outer_scale must be positive");
  const int n = grid.dim();
  if (entry.support.dim() != n) throw std::invalid_argument("sample_entry: dimension mismatch");

  // Effective support of x -> entry(outer_scale * x) is support / outer_scale.
  {
    std::vector<double> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      lo[static_cast<std::size_t>(a)] = entry.support.lower()[a] / outer_scale;
      hi[static_cast<std::size_t>(a)] = entry.support.upper()[a] / outer_scale;
    }
    if (!grid.box().contains(Box(lo, hi)))
      throw std::invalid_argument(
          "sample_entry: dilated support leaves the grid box (outer_scale " +
          std::to_string(outer_scale) + ")");
  }

  std::vector<double> vals(grid.size(), 0.0);
  std::vector<double> y(static_cast<std::size_t>(n));
  std::vector<double> arg(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const std::vector<int> mi = grid.multi_index(k);
    for (int a = 0; a < n; ++a) y[static_cast<std::size_t>(a)] = outer_scale * grid.center(a, mi[a]);
    if (!entry.support.contains(y)) continue;
    for (int a = 0; a < n; ++a)
      arg[static_cast<std::size_t>(a)] =
          entry.dilation * (y[static_cast<std::size_t>(a)] - entry.translation[static_cast<std::size_t>(a)]);
    vals[k] = std::fabs(evaluate(entry.spec, arg));
  }
  return GridFunction(grid, std::move(vals));
}

}  // namespace mixnorm
