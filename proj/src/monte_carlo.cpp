#include "sumsetlab/monte_carlo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace sumsetlab {

namespace {

std::uint64_t mask_from_word(const EnsembleLayout& lay, std::uint64_t word) {
  const std::uint64_t free_bits =
      lay.n_free >= 64 ? ~0ull : (1ull << lay.n_free) - 1;
  return ((word & free_bits) << lay.shift) | lay.forced;
}

}  // namespace

SubsetMask sample_subset(Ensemble e, int n, SampleStream& stream) {
  const EnsembleLayout lay = ensemble_layout(e, n);
  const std::uint64_t word = stream_word(stream.seed, stream.index);
  ++stream.index;
  return SubsetMask{n, mask_from_word(lay, word)};
}

double EstimatedPmf::p_hat(std::size_t m) const {
  return static_cast<double>(hits[m]) / static_cast<double>(samples);
}

double EstimatedPmf::std_err(std::size_t m) const {
  const double p = p_hat(m);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

EstimatedPmf mc_pmf(const DistQuery& q, std::uint64_t samples,
                    std::uint64_t seed, const McOptions& opts) {
  const EnsembleLayout lay = ensemble_layout(q.ensemble, q.n);
  const IntervalSpec iv = resolve_interval(q);
  if (samples == 0) throw ZeroSamples("mc_pmf needs at least one sample");

  const std::size_t bins = static_cast<std::size_t>(iv.length()) + 1;
  int workers = opts.workers > 0 ? opts.workers : omp_get_max_threads();
  workers = std::max(workers, 1);

  std::vector<std::vector<std::uint64_t>> local(
      static_cast<std::size_t>(workers), std::vector<std::uint64_t>(bins, 0));

  const bool sums = q.kind == Kind::Sum;
  const bool narrow = q.n <= 32;
  const SumWindow sw = sums ? make_sum_window(iv) : SumWindow{};
  const DiffWindow dw = sums ? DiffWindow{} : make_diff_window(iv);

  // Each worker owns a contiguous block of draw indices; draw i depends only
  // on (seed, i), so the merged tallies are independent of the partition.
#pragma omp parallel for schedule(static, 1) num_threads(workers)
  for (int t = 0; t < workers; ++t) {
    const std::uint64_t chunk = samples / static_cast<std::uint64_t>(workers);
    const std::uint64_t rem = samples % static_cast<std::uint64_t>(workers);
    const std::uint64_t ut = static_cast<std::uint64_t>(t);
    const std::uint64_t begin = ut * chunk + std::min(ut, rem);
    const std::uint64_t end = begin + chunk + (ut < rem ? 1 : 0);
    auto& tally = local[static_cast<std::size_t>(t)];
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t mask = mask_from_word(lay, stream_word(seed, i));
      int miss;
      if (sums && narrow) {
        miss = missing_in(sw, sum_bits64(mask), 0);
      } else if (sums) {
        std::uint64_t s0, s1;
        sum_bits128(mask, s0, s1);
        miss = missing_in(sw, s0, s1);
      } else {
        miss = missing_in(dw, diff_bits64(mask));
      }
      ++tally[static_cast<std::size_t>(miss)];
    }
  }

  EstimatedPmf est;
  est.samples = samples;
  est.seed = seed;
  est.hits.assign(bins, 0);
  for (const auto& tally : local) {
    for (std::size_t i = 0; i < bins; ++i) est.hits[i] += tally[i];
  }
  return est;
}

}  // namespace sumsetlab
