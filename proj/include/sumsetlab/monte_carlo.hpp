#pragma once

#include <cstdint>
#include <vector>

#include "sumsetlab/ensemble.hpp"

namespace sumsetlab {

// Counter-based sampling: draw i of a run is a pure function of (seed, i),
// so replays are exact and workers can tally disjoint index blocks in any
// order.  For a fixed seed the tallies are bit-identical across runs and
// across worker counts.
struct SampleStream {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

// The splitmix64 output for counter `index` under key `seed`.
inline std::uint64_t stream_word(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// One uniform draw from the ensemble; consumes exactly one stream word
// (n <= 64, so a single word covers every membership bit).
SubsetMask sample_subset(Ensemble e, int n, SampleStream& stream);

struct McOptions {
  int workers = 0;  // 0: one worker per hardware thread
};

// Monte Carlo estimate of a missing-count distribution.
struct EstimatedPmf {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> hits;

  [[nodiscard]] double p_hat(std::size_t m) const;
  // Binomial standard error sqrt(p(1-p)/samples) of bin m.
  [[nodiscard]] double std_err(std::size_t m) const;
};

// Draw `samples` subsets and tally the missing count in q's interval.
// Throws ZeroSamples when samples == 0; query validation as in exact_pmf.
EstimatedPmf mc_pmf(const DistQuery& q, std::uint64_t samples,
                    std::uint64_t seed, const McOptions& opts = {});

}  // namespace sumsetlab
