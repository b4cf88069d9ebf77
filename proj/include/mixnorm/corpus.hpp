#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixnorm/geometry.hpp"
#include "mixnorm/grid_function.hpp"

namespace mixnorm {

/// One test function: a nonnegative, compactly supported realization
/// |spec(dilation * (x - translation))| * chi_support(x).
struct CorpusEntry {
  FnSpec spec;
  double dilation = 1.0;
  std::vector<double> translation;
  Box support;
  std::string label;
};

struct Corpus {
  std::uint64_t seed = 0;
  std::vector<CorpusEntry> entries;
};

/// Deterministic corpus of compactly supported nonnegative test functions
/// with varied support scales and positions, all inside `domain`. The same
/// seed always regenerates the identical corpus.
Corpus make_corpus(std::uint64_t seed, int size, const std::vector<FnSpec::Kind>& kinds,
                   const Box& domain);

/// Default kinds: indicator, gaussian, smooth-random.
Corpus make_corpus(std::uint64_t seed, int size, const Box& domain);

/// Sample an entry on the grid; `outer_scale` evaluates the entry at
/// outer_scale * x, realizing the dilation f_lambda(x) = f(lambda x).
/// The dilated support must stay inside the grid box.
GridFunction sample_entry(const CorpusEntry& entry, const Grid& grid, double outer_scale = 1.0);

}  // namespace mixnorm
