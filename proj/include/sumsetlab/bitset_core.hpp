#pragma once

#include <bit>
#include <cstdint>
#include <span>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

// Widest supported universe {0,...,63}; pair sums then occupy [0,126].
inline constexpr int kMaxUniverse = 64;

enum class Kind { Sum, Diff };

// Closed integer interval [lo,hi]. lo > hi encodes the empty interval,
// which is legal everywhere and always yields a missing count of 0.
struct IntervalSpec {
  int lo = 0;
  int hi = -1;

  [[nodiscard]] bool empty() const { return lo > hi; }
  [[nodiscard]] int length() const { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const IntervalSpec&) const = default;
};

// Named windows into the sum range [0,2n-2] and the difference range.
// Xs/Ms/Ml/Xl/M use the q = floor(n/8) boundary; Xs and Xl may be empty
// for n < 8.  DiffHalf is [0,n-1], DiffFull is [-(n-1),n-1].
enum class PresetName { All, S, L, Xs, Ms, Ml, Xl, M, DiffHalf, DiffFull };

// Subset of {0,...,n-1}: bit i set <=> i is an element.
struct SubsetMask {
  int n = 0;
  std::uint64_t bits = 0;

  [[nodiscard]] int cardinality() const { return std::popcount(bits); }
  [[nodiscard]] bool contains(int e) const {
    return e >= 0 && e < n && ((bits >> e) & 1u);
  }
  bool operator==(const SubsetMask&) const = default;
};

// Pair sums or pair differences of a subset, one bit per attainable value.
// Sums use up to 127 value bits split across w0/w1.  Differences store only
// the nonnegative half [0,n-1] in w0; the negative half is its mirror image
// (v attainable <=> -v attainable), so it is never materialized.
struct PairSet {
  Kind kind = Kind::Sum;
  int n = 0;
  std::uint64_t w0 = 0;  // values 0..63
  std::uint64_t w1 = 0;  // values 64..126 (sums only)

  // Membership of value v, mirror-aware for differences.
  [[nodiscard]] bool contains(long v) const {
    if (kind == Kind::Diff) {
      if (v < 0) v = -v;
      return v < n && ((w0 >> v) & 1u);
    }
    if (v < 0 || v > 2L * n - 2) return false;
    return v < 64 ? ((w0 >> v) & 1u) : ((w1 >> (v - 64)) & 1u);
  }
};

// Builds a mask from an element list; duplicates collapse.
// Throws BadUniverse for n outside [1,64], ElementOutOfRange for bad elements.
SubsetMask make_subset(std::span<const int> elements, int n);

PairSet sumset(const SubsetMask& r);
PairSet diffset(const SubsetMask& r);

// Number of values in [interval.lo, interval.hi] not attained by ps.
// Throws IntervalOutOfRange if a nonempty interval leaves the valid range
// ([0,2n-2] for sums, [-(n-1),n-1] for differences).
int missing_count(const PairSet& ps, IntervalSpec interval);

IntervalSpec preset_interval(PresetName name, int n);

// ---------------------------------------------------------------------------
// Raw kernels used by the enumeration and sampling loops.  No validation.

// Bits 0..b inclusive; b in [-1,63].
inline constexpr std::uint64_t bits_through(int b) {
  if (b < 0) return 0;
  if (b >= 63) return ~0ull;
  return (1ull << (b + 1)) - 1;
}

// Bits a..b inclusive within one word; empty if b < a after clamping to 0..63.
inline constexpr std::uint64_t bit_range(int a, int b) {
  if (a < 0) a = 0;
  if (b > 63) b = 63;
  if (b < a) return 0;
  return bits_through(b) & ~bits_through(a - 1);
}

// Sum bits of mask, valid for n <= 32 (values fit one word).
inline std::uint64_t sum_bits64(std::uint64_t mask) {
  std::uint64_t s = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    s |= mask << std::countr_zero(m);
  }
  return s;
}

// Sum bits of mask for any n <= 64; values 0..63 land in s0, 64..126 in s1.
inline void sum_bits128(std::uint64_t mask, std::uint64_t& s0,
                        std::uint64_t& s1) {
  s0 = 0;
  s1 = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    const int i = std::countr_zero(m);
    s0 |= mask << i;
    if (i > 0) s1 |= mask >> (64 - i);
  }
}

// Nonnegative difference bits of mask (bit d set <=> some pair differs by d).
inline std::uint64_t diff_bits64(std::uint64_t mask) {
  std::uint64_t d = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    d |= mask >> std::countr_zero(m);
  }
  return d;
}

// Precomputed windows so the hot loops count missing values with two
// popcounts instead of re-deriving interval masks per subset.
struct SumWindow {
  std::uint64_t w0 = 0;
  std::uint64_t w1 = 0;
  int len = 0;
};

struct DiffWindow {
  std::uint64_t pos = 0;  // window over the nonnegative values
  std::uint64_t neg = 0;  // mirror of the negative values, also >= 0 bits
  int len = 0;
};

SumWindow make_sum_window(IntervalSpec iv);
DiffWindow make_diff_window(IntervalSpec iv);

inline int missing_in(const SumWindow& w, std::uint64_t s0, std::uint64_t s1) {
  return w.len - std::popcount(s0 & w.w0) - std::popcount(s1 & w.w1);
}

inline int missing_in(const DiffWindow& w, std::uint64_t d) {
  return w.len - std::popcount(d & w.pos) - std::popcount(d & w.neg);
}

}  // namespace sumsetlab
