#pragma once

#include <cstdint>
#include <vector>

#include "sumsetlab/exact_enum.hpp"

namespace sumsetlab::ref {

// Deliberately naive implementations kept as oracles for the bit kernels and
// as the baseline in benchmarks.  Element lists, boolean tables and a plain
// serial scan over all 2^n subsets; no shift-or tricks, no shared layout
// arithmetic.

std::vector<int> subset_elements(std::uint64_t bits, int n);

// Missing values of the pair sums (or differences) of elems inside iv.
int missing_count(const std::vector<int>& elems, Kind kind, IntervalSpec iv,
                  int n);

// Same contract as sumsetlab::exact_pmf.  Scans all 2^n masks and filters by
// the ensemble's membership conditions, so the guard applies to n itself.
ExactPmf exact_pmf(const DistQuery& q, int guard_log2 = kDefaultGuardLog2);

}  // namespace sumsetlab::ref
