#include "sumsetlab/reference.hpp"

#include <string>

namespace sumsetlab::ref {

std::vector<int> subset_elements(std::uint64_t bits, int n) {
  std::vector<int> elems;
  for (int i = 0; i < n; ++i) {
    if ((bits >> i) & 1u) elems.push_back(i);
  }
  return elems;
}

int missing_count(const std::vector<int>& elems, Kind kind, IntervalSpec iv,
                  int n) {
  if (iv.empty()) return 0;
  // Sums live in [0,2n-2], differences in [-(n-1),n-1]: 2n-1 slots either way.
  const int base = kind == Kind::Sum ? 0 : n - 1;
  std::vector<char> attained(static_cast<std::size_t>(2 * n - 1), 0);
  for (int a : elems) {
    for (int b : elems) {
      const int v = kind == Kind::Sum ? a + b : a - b;
      attained[static_cast<std::size_t>(v + base)] = 1;
    }
  }
  int missing = 0;
  for (int v = iv.lo; v <= iv.hi; ++v) {
    if (!attained[static_cast<std::size_t>(v + base)]) ++missing;
  }
  return missing;
}

ExactPmf exact_pmf(const DistQuery& q, int guard_log2) {
  const IntervalSpec iv = resolve_interval(q);
  if (q.n > guard_log2 || q.n > 62) {
    throw TooLarge("reference scan of 2^" + std::to_string(q.n) +
                   " subsets exceeds guard 2^" + std::to_string(guard_log2));
  }
  int forced = 0;
  if (q.ensemble == Ensemble::Zero) forced = 1;
  if (q.ensemble == Ensemble::ZeroEnd) forced = q.n == 1 ? 1 : 2;

  ExactPmf pmf;
  pmf.n_free = q.n - forced;
  pmf.counts.assign(static_cast<std::size_t>(iv.length()) + 1, 0);
  const std::uint64_t total = 1ull << q.n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (q.ensemble != Ensemble::Free && !(mask & 1u)) continue;
    if (q.ensemble == Ensemble::ZeroEnd && !((mask >> (q.n - 1)) & 1u)) {
      continue;
    }
    const auto elems = subset_elements(mask, q.n);
    ++pmf.counts[static_cast<std::size_t>(
        missing_count(elems, q.kind, iv, q.n))];
  }
  return pmf;
}

}  // namespace sumsetlab::ref
