#include "sumsetlab/exact_enum.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <string>

namespace sumsetlab {

namespace {

int effective_workers(int requested) {
  if (requested > 0) return requested;
  const int hw = omp_get_max_threads();
  return hw > 0 ? hw : 1;
}

void check_guard(int n_free, int guard_log2) {
  const int guard = std::min(guard_log2, 62);
  if (n_free > guard) {
    throw TooLarge("enumeration of 2^" + std::to_string(n_free) +
                   " subsets exceeds guard 2^" + std::to_string(guard));
  }
}

struct Range {
  std::uint64_t begin = 0, end = 0;
};

Range worker_range(std::uint64_t total, int workers, int w) {
  const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
  const std::uint64_t rem = total % static_cast<std::uint64_t>(workers);
  const std::uint64_t uw = static_cast<std::uint64_t>(w);
  const std::uint64_t begin = uw * chunk + std::min(uw, rem);
  return {begin, begin + chunk + (uw < rem ? 1 : 0)};
}

// Runs fn(mask, tally) over every admissible mask, one contiguous block per
// worker.  Tallies are merged by addition, so the result does not depend on
// the worker count.
template <class Fn>
std::vector<std::uint64_t> tally_masks(const EnsembleLayout& lay,
                                       std::size_t bins, int workers,
                                       Fn&& fn) {
  const std::uint64_t total = 1ull << lay.n_free;
  std::vector<std::vector<std::uint64_t>> local(
      static_cast<std::size_t>(workers), std::vector<std::uint64_t>(bins, 0));
#pragma omp parallel for schedule(static, 1) num_threads(workers)
  for (int t = 0; t < workers; ++t) {
    const Range r = worker_range(total, workers, t);
    auto& tally = local[static_cast<std::size_t>(t)];
    for (std::uint64_t v = r.begin; v < r.end; ++v) {
      fn((v << lay.shift) | lay.forced, tally);
    }
  }
  std::vector<std::uint64_t> out(bins, 0);
  for (const auto& tally : local) {
    for (std::size_t i = 0; i < bins; ++i) out[i] += tally[i];
  }
  return out;
}

}  // namespace

std::uint64_t ExactPmf::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts) t += c;
  return t;
}

double ExactPmf::prob(std::size_t m) const {
  return std::ldexp(static_cast<double>(counts[m]), -n_free);
}

Rational ExactPmf::prob_rational(std::size_t m) const {
  return Rational(BigInt(counts[m]), pow2(static_cast<unsigned>(n_free)));
}

int ExactPmf::max_support() const {
  for (std::size_t i = counts.size(); i-- > 0;) {
    if (counts[i] > 0) return static_cast<int>(i);
  }
  return -1;
}

ExactPmf exact_pmf(const DistQuery& q, const EnumOptions& opts) {
  const EnsembleLayout lay = ensemble_layout(q.ensemble, q.n);
  const IntervalSpec iv = resolve_interval(q);
  check_guard(lay.n_free, opts.guard_log2);
  const std::size_t bins = static_cast<std::size_t>(iv.length()) + 1;
  const int workers = effective_workers(opts.workers);

  ExactPmf pmf;
  pmf.n_free = lay.n_free;
  if (q.kind == Kind::Sum && q.n <= 32) {
    const SumWindow w = make_sum_window(iv);
    pmf.counts = tally_masks(lay, bins, workers,
                             [&w](std::uint64_t mask, auto& tally) {
                               ++tally[static_cast<std::size_t>(
                                   missing_in(w, sum_bits64(mask), 0))];
                             });
  } else if (q.kind == Kind::Sum) {
    const SumWindow w = make_sum_window(iv);
    pmf.counts = tally_masks(lay, bins, workers,
                             [&w](std::uint64_t mask, auto& tally) {
                               std::uint64_t s0, s1;
                               sum_bits128(mask, s0, s1);
                               ++tally[static_cast<std::size_t>(
                                   missing_in(w, s0, s1))];
                             });
  } else {
    const DiffWindow w = make_diff_window(iv);
    pmf.counts = tally_masks(lay, bins, workers,
                             [&w](std::uint64_t mask, auto& tally) {
                               ++tally[static_cast<std::size_t>(
                                   missing_in(w, diff_bits64(mask)))];
                             });
  }
  return pmf;
}

ExactPmf JointCounts::marginal_a() const {
  ExactPmf pmf;
  pmf.n_free = n_free;
  pmf.counts.assign(rows, 0);
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < cols; ++b) pmf.counts[a] += at(a, b);
  }
  return pmf;
}

ExactPmf JointCounts::marginal_b() const {
  ExactPmf pmf;
  pmf.n_free = n_free;
  pmf.counts.assign(cols, 0);
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < cols; ++b) pmf.counts[b] += at(a, b);
  }
  return pmf;
}

JointCounts exact_joint_pmf(Ensemble e, Kind kind,
                            std::variant<PresetName, IntervalSpec> interval_a,
                            std::variant<PresetName, IntervalSpec> interval_b,
                            int n, const EnumOptions& opts) {
  const EnsembleLayout lay = ensemble_layout(e, n);
  const IntervalSpec iva = resolve_interval({e, kind, interval_a, n});
  const IntervalSpec ivb = resolve_interval({e, kind, interval_b, n});
  check_guard(lay.n_free, opts.guard_log2);
  JointCounts jc;
  jc.n_free = lay.n_free;
  jc.rows = static_cast<std::size_t>(iva.length()) + 1;
  jc.cols = static_cast<std::size_t>(ivb.length()) + 1;
  const int workers = effective_workers(opts.workers);
  const std::size_t cols = jc.cols;

  if (kind == Kind::Sum && n <= 32) {
    const SumWindow wa = make_sum_window(iva);
    const SumWindow wb = make_sum_window(ivb);
    jc.counts = tally_masks(
        lay, jc.rows * jc.cols, workers,
        [&](std::uint64_t mask, auto& tally) {
          const std::uint64_t s = sum_bits64(mask);
          ++tally[static_cast<std::size_t>(missing_in(wa, s, 0)) * cols +
                  static_cast<std::size_t>(missing_in(wb, s, 0))];
        });
  } else if (kind == Kind::Sum) {
    const SumWindow wa = make_sum_window(iva);
    const SumWindow wb = make_sum_window(ivb);
    jc.counts = tally_masks(
        lay, jc.rows * jc.cols, workers,
        [&](std::uint64_t mask, auto& tally) {
          std::uint64_t s0, s1;
          sum_bits128(mask, s0, s1);
          ++tally[static_cast<std::size_t>(missing_in(wa, s0, s1)) * cols +
                  static_cast<std::size_t>(missing_in(wb, s0, s1))];
        });
  } else {
    const DiffWindow wa = make_diff_window(iva);
    const DiffWindow wb = make_diff_window(ivb);
    jc.counts = tally_masks(
        lay, jc.rows * jc.cols, workers,
        [&](std::uint64_t mask, auto& tally) {
          const std::uint64_t d = diff_bits64(mask);
          ++tally[static_cast<std::size_t>(missing_in(wa, d)) * cols +
                  static_cast<std::size_t>(missing_in(wb, d))];
        });
  }
  return jc;
}

ExactPmf min_element_pmf(int n) {
  if (n < 1 || n > kMaxUniverse) {
    throw BadUniverse("universe size must be in [1," +
                      std::to_string(kMaxUniverse) + "], got " +
                      std::to_string(n));
  }
  // P(min = i) halves with each i: all of 0..i-1 absent, i present.
  ExactPmf pmf;
  pmf.n_free = n;
  pmf.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    pmf.counts[static_cast<std::size_t>(i)] = 1ull << (n - 1 - i);
  }
  pmf.counts[static_cast<std::size_t>(n)] = 1;  // empty subset
  return pmf;
}

}  // namespace sumsetlab
