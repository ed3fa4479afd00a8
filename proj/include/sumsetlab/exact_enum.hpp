#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sumsetlab/ensemble.hpp"
#include "sumsetlab/rational.hpp"

namespace sumsetlab {

inline constexpr int kDefaultGuardLog2 = 30;

// workers == 0 means one worker per hardware thread.  Results are
// bit-identical for every worker count: each worker tallies a contiguous
// block of the enumeration order and the integer tallies merge by addition.
struct EnumOptions {
  int workers = 0;
  int guard_log2 = kDefaultGuardLog2;
};

// Exact distribution of a missing count: counts[m] subsets attain m, over a
// denominator of 2^n_free subsets.
struct ExactPmf {
  int n_free = 0;
  std::vector<std::uint64_t> counts;

  [[nodiscard]] std::uint64_t total() const;
  [[nodiscard]] double prob(std::size_t m) const;
  [[nodiscard]] Rational prob_rational(std::size_t m) const;
  // Largest m with counts[m] > 0; -1 when all mass sits nowhere (impossible
  // for a valid pmf, kept for safety).
  [[nodiscard]] int max_support() const;
};

// Enumerates every admissible subset.  counts has interval_length + 1 bins.
// Throws TooLarge when n_free exceeds opts.guard_log2, BadQuery on
// interval/kind mismatch.
ExactPmf exact_pmf(const DistQuery& q, const EnumOptions& opts = {});

// Joint tallies of two missing counts over the same ensemble and kind.
struct JointCounts {
  int n_free = 0;
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> counts;  // row-major: (m_a, m_b)

  [[nodiscard]] std::uint64_t at(std::size_t a, std::size_t b) const {
    return counts[a * cols + b];
  }
  [[nodiscard]] ExactPmf marginal_a() const;
  [[nodiscard]] ExactPmf marginal_b() const;
};

JointCounts exact_joint_pmf(Ensemble e, Kind kind,
                            std::variant<PresetName, IntervalSpec> interval_a,
                            std::variant<PresetName, IntervalSpec> interval_b,
                            int n, const EnumOptions& opts = {});

// Distribution of the smallest element of a free uniform subset of
// {0,...,n-1}: counts[i] = 2^(n-1-i) for i < n; the empty subset is its own
// outcome, stored at counts[n].
ExactPmf min_element_pmf(int n);

}  // namespace sumsetlab
