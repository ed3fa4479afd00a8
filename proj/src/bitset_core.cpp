#include "sumsetlab/bitset_core.hpp"

#include <string>

namespace sumsetlab {

namespace {

void check_universe(int n) {
  if (n < 1 || n > kMaxUniverse) {
    throw BadUniverse("universe size must be in [1," +
                      std::to_string(kMaxUniverse) + "], got " +
                      std::to_string(n));
  }
}

}  // namespace

SubsetMask make_subset(std::span<const int> elements, int n) {
  check_universe(n);
  SubsetMask r{n, 0};
  for (int e : elements) {
    if (e < 0 || e >= n) {
      throw ElementOutOfRange("element " + std::to_string(e) +
                              " outside {0,...," + std::to_string(n - 1) +
                              "}");
    }
    r.bits |= 1ull << e;
  }
  return r;
}

PairSet sumset(const SubsetMask& r) {
  check_universe(r.n);
  PairSet ps{Kind::Sum, r.n, 0, 0};
  sum_bits128(r.bits, ps.w0, ps.w1);
  return ps;
}

PairSet diffset(const SubsetMask& r) {
  check_universe(r.n);
  return PairSet{Kind::Diff, r.n, diff_bits64(r.bits), 0};
}

int missing_count(const PairSet& ps, IntervalSpec interval) {
  if (interval.empty()) return 0;
  if (ps.kind == Kind::Sum) {
    if (interval.lo < 0 || interval.hi > 2 * ps.n - 2) {
      throw IntervalOutOfRange("sum interval [" + std::to_string(interval.lo) +
                               "," + std::to_string(interval.hi) +
                               "] leaves [0," + std::to_string(2 * ps.n - 2) +
                               "]");
    }
    const SumWindow w = make_sum_window(interval);
    return missing_in(w, ps.w0, ps.w1);
  }
  if (interval.lo < -(ps.n - 1) || interval.hi > ps.n - 1) {
    throw IntervalOutOfRange("difference interval [" +
                             std::to_string(interval.lo) + "," +
                             std::to_string(interval.hi) + "] leaves [-" +
                             std::to_string(ps.n - 1) + "," +
                             std::to_string(ps.n - 1) + "]");
  }
  const DiffWindow w = make_diff_window(interval);
  return missing_in(w, ps.w0);
}

IntervalSpec preset_interval(PresetName name, int n) {
  check_universe(n);
  const int q = n / 8;
  const int top = 2 * n - 2;
  switch (name) {
    case PresetName::All:
      return {0, top};
    case PresetName::S:
      return {0, n - 1};
    case PresetName::L:
      return {n, top};
    case PresetName::Xs:
      return {0, q - 1};
    case PresetName::Ms:
      return {q, n - 1};
    case PresetName::Ml:
      return {n, top - q};
    case PresetName::Xl:
      return {top - q + 1, top};
    case PresetName::M:
      return {q, top - q};
    case PresetName::DiffHalf:
      return {0, n - 1};
    case PresetName::DiffFull:
      return {-(n - 1), n - 1};
  }
  throw BadQuery("unknown preset");
}

SumWindow make_sum_window(IntervalSpec iv) {
  if (iv.empty()) return {};
  SumWindow w;
  w.w0 = bit_range(iv.lo, iv.hi);
  w.w1 = bit_range(iv.lo - 64, iv.hi - 64);
  w.len = iv.length();
  return w;
}

DiffWindow make_diff_window(IntervalSpec iv) {
  if (iv.empty()) return {};
  DiffWindow w;
  w.len = iv.length();
  if (iv.hi >= 0) {
    w.pos = bit_range(iv.lo < 0 ? 0 : iv.lo, iv.hi);
  }
  if (iv.lo < 0) {
    // Values lo..min(hi,-1) mirror onto max(1,-hi)..-lo.
    const int mhi = -iv.lo;
    const int mlo = iv.hi >= -1 ? 1 : -iv.hi;
    w.neg = bit_range(mlo, mhi);
  }
  return w;
}

}  // namespace sumsetlab
